//! Direct radius-of-property scans: walk circles outward, watch the
//! functional's minimum, bisect the first sign change.
//!
//! Run with: cargo run --example geometric_radii

use omega_gft::geometry::{self, PropertyKind, ScanConfig};
use omega_gft::series::TaylorSeries;

fn main() {
    let cfg = ScanConfig {
        theta_samples: 1024,
        ..ScanConfig::default()
    };

    // z + z^2/2: convex exactly on |z| < 1/2, starlike on the whole disk.
    let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
    for kind in [
        PropertyKind::Convex,
        PropertyKind::Starlike,
        PropertyKind::CloseToConvex,
    ] {
        let res = geometry::radius_of_positivity(kind, &f, &cfg).unwrap();
        println!(
            "z + z^2/2  {:<14} radius = {:.7} (residual {:.1e}, argmin theta {:.4})",
            format!("{:?}", kind),
            res.radius,
            res.residual,
            res.argmin_theta
        );
    }

    // z + lz^2: starlike radius 1/(2l), convex radius 1/(4l).
    println!();
    for lambda in [0.6, 1.0, 2.0] {
        let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
        let star = geometry::radius_of_positivity(PropertyKind::Starlike, &f, &cfg).unwrap();
        let conv = geometry::radius_of_positivity(PropertyKind::Convex, &f, &cfg).unwrap();
        println!(
            "z + {:.1}z^2: starlike {:.7} (1/(2l) = {:.7}), convex {:.7} (1/(4l) = {:.7})",
            lambda,
            star.radius,
            1.0 / (2.0 * lambda),
            conv.radius,
            1.0 / (4.0 * lambda)
        );
    }

    // The functional itself, on one circle.
    let f = TaylorSeries::from_real(&[1.0, 0.5]).unwrap();
    let m = geometry::min_on_circle(PropertyKind::Convex, &f, 0.5, &cfg).unwrap();
    println!(
        "\nmin of the convex functional of z + z^2/2 on |z| = 0.5: {:.3e} at theta = {:.6}",
        m.min_value, m.argmin_theta
    );
}
