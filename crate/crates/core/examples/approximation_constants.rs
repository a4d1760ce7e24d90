//! The constants controlling |s_n'/f' - 1|: the growth envelope A_n at an
//! inner radius, its outer-radius form B_n, the composite C_n, and the
//! minimal order past which Re(s_n') > 0 on |z| <= 0.547.
//!
//! Run with: cargo run --example approximation_constants

use omega_gft::bounds::{self, HarmonicMode};
use omega_gft::omega;

fn main() {
    println!(
        "growth factor n+1+H_(n-1), exact vs log-approximation (gamma = {:.10}):",
        bounds::EULER_MASCHERONI
    );
    for n in [2usize, 5, 10, 20] {
        let exact = bounds::growth_factor(n, HarmonicMode::ExactHarmonic).unwrap();
        let approx = bounds::growth_factor(n, HarmonicMode::LogApprox).unwrap();
        println!(
            "  n = {:>2}: exact {:>9.5}, log-approx {:>9.5}, gap {:.3}%",
            n,
            exact,
            approx,
            100.0 * (exact - approx) / exact
        );
    }

    println!("\nA_n at r = 0.5 and B_n at r_outer = 0.99 (log-approx mode):");
    for n in [2usize, 5, 10] {
        let c = bounds::approx_constants(n, 0.5, Some(0.99), HarmonicMode::LogApprox).unwrap();
        println!(
            "  n = {:>2}: A_n = {:>10.5}, B_n = {:>10.5}, C_n = {:.6}",
            n,
            c.a_n,
            c.b_n.unwrap(),
            c.c_n
        );
    }

    // The composite constant 61.735 rebuilt from its factors.
    println!(
        "\ncomposite constant: printed {:.3}, rebuilt {:.6}",
        bounds::MINIMAL_N_CONSTANT,
        bounds::reconstructed_minimal_n_constant()
    );

    // C_n drops below sin(56.84 deg) exactly at n = 12.
    println!(
        "\nC_n near the threshold sin(56.84 deg) = {:.6}:",
        56.84f64.to_radians().sin()
    );
    for n in 10..=14 {
        println!("  C_{:<2} = {:.6}", n, bounds::c_n(n).unwrap());
    }
    println!(
        "minimal order: {}",
        bounds::minimal_n(bounds::DEFAULT_ANGLE_BUDGET_DEGREES)
    );

    // Measured ratio gaps sit far below the envelope for a real member.
    let f = omega::family_f_mu(0.5, 64).unwrap();
    let cert = omega::is_member(&f, 0.5, 1e-9).unwrap();
    println!("\nmeasured max |s_n'/f' - 1| vs envelope (r = 0.4, exact-harmonic):");
    for n in [2usize, 4, 8] {
        let rep =
            bounds::ratio_gap_check(&f, &cert, n, 0.4, 1024, HarmonicMode::ExactHarmonic, None)
                .unwrap();
        println!(
            "  n = {}: measured {:.3e} <= bound {:.3e}",
            n, rep.measured, rep.bound
        );
    }
}
