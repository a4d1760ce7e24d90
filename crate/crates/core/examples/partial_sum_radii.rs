//! Scan the starlikeness, convexity and close-to-convexity radii of Taylor
//! partial sums, and compare with the universal lower bounds (the catalog
//! roots) that hold for every member at defect bound 1/2.
//!
//! Run with: cargo run --example partial_sum_radii

use omega_gft::geometry::{self, PropertyKind, ScanConfig};
use omega_gft::omega;
use omega_gft::roots;

fn main() {
    let cfg = ScanConfig {
        theta_samples: 1024,
        ..ScanConfig::default()
    };

    let bounds = [
        (
            PropertyKind::Convex,
            roots::named_radius("convexity_2_1").unwrap().root,
        ),
        (
            PropertyKind::Starlike,
            roots::named_radius("starlike_2_2").unwrap().root,
        ),
        (
            PropertyKind::CloseToConvex,
            roots::named_radius("ctc_2_5").unwrap().root,
        ),
    ];

    // The cubic truncation of the Möbius family at μ = 0.9 is the classic
    // witness that partial sums lose convexity before the function does.
    println!("s_3 of the Moebius member at mu = 0.9:");
    let f = omega::family_f_mu(0.9, 24).unwrap();
    for (kind, bound) in bounds {
        let res = geometry::partial_sum_radius(kind, &f, 3, &cfg).unwrap();
        println!(
            "  {:<14} radius = {:.6}  (universal bound {:.6}, residual {:.2e})",
            format!("{:?}", kind),
            res.radius,
            bound,
            res.residual
        );
    }

    // Where the triangle-inequality coefficient estimate for that truncation stops
    // certifying convexity: the root of 1 - 2(0.9)r - (9/4)(1-0.81)r².
    let bound_root =
        roots::solve_bracketed(roots::cubic_convexity_bound(0.9), 0.0, 1.0, 1e-12).unwrap();
    println!(
        "\ncoefficient-estimate convexity root at mu=0.9: {:.6}",
        bound_root.root
    );
    println!("(the scanned radius above is at least this large)");

    // Radii across orders for a fixed member: they settle quickly.
    println!("\nconvex radius of s_n, Moebius member at mu = 0.5:");
    let f = omega::family_f_mu(0.5, 24).unwrap();
    for n in [2usize, 3, 5, 8, 12] {
        let res = geometry::partial_sum_radius(PropertyKind::Convex, &f, n, &cfg).unwrap();
        println!("  n = {:>2}: {:.6}", n, res.radius);
    }
}
