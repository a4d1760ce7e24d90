//! Solve every named radius equation in the catalog and show the two roots
//! that have closed forms.
//!
//! Run with: cargo run --example named_roots

use omega_gft::roots;

fn main() {
    println!(
        "{:<22} {:>16} {:>12} {:>11}",
        "name", "root", "residual", "iterations"
    );
    for eq in roots::catalog() {
        let res = eq.solve().unwrap();
        println!(
            "{:<22} {:>16.12} {:>12.3e} {:>11}",
            eq.name, res.root, res.residual, res.iterations
        );
    }

    println!("\nclosed forms:");
    let r = roots::named_radius("aux_3r2_4r_4").unwrap().root;
    println!(
        "  aux_3r2_4r_4       = {:.12}  (exact 2/3: {:+.2e})",
        r,
        r - 2.0 / 3.0
    );
    let r = roots::named_radius("tail_dominance_f").unwrap().root;
    let exact = 1.0 - (-2.0f64).exp();
    println!(
        "  tail_dominance_f   = {:.12}  (exact 1 - e^-2: {:+.2e})",
        r,
        r - exact
    );

    // The worst-case positivity radius of Re(s_n') interpolates between
    // 1 (n = 2) and the close-to-convexity root as n grows.
    println!("\npositivity radius of Re(s_n') in the worst case:");
    for n in [2usize, 3, 6, 12, 24, 48] {
        let res = roots::partial_sum_positivity_radius(n).unwrap();
        println!("  n = {:>2}: {:.10}", n, res.root);
    }
}
