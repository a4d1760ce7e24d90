//! Three sufficient conditions for membership at defect bound lambda, with
//! the witnesses showing the constants 2*lambda and 3*lambda are sharp.
//!
//! Run with: cargo run --example sufficient_conditions

use num_complex::Complex64;
use omega_gft::omega::{self, Sufficiency};
use omega_gft::series::TaylorSeries;

fn verdict(s: Sufficiency) -> &'static str {
    match s {
        Sufficiency::Sufficient => "sufficient",
        Sufficiency::Inconclusive => "inconclusive",
    }
}

fn main() {
    let lambda = 0.5;

    // Coefficient sum: sum (k-1)|a_k| < lambda.
    println!("coefficient-sum test at lambda = {}:", lambda);
    let f = TaylorSeries::from_real(&[1.0, lambda / 2.0]).unwrap();
    println!(
        "  z + (l/2)z^2       -> {}",
        verdict(omega::coeff_sum_sufficient(&f, lambda).unwrap())
    );
    let f = omega::extremal_k(5, lambda).unwrap();
    println!(
        "  z + (l/4)z^5       -> {} (sum equals lambda; boundary scan still certifies: {})",
        verdict(omega::coeff_sum_sufficient(&f, lambda).unwrap()),
        omega::is_member(&f, lambda, 1e-9).unwrap().member
    );

    // Second derivative: max |f''| <= 2 lambda.
    println!("\nsecond-derivative test:");
    let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
    println!(
        "  z + l z^2 (|f''| = 2l exactly)  -> {}",
        verdict(omega::second_deriv_sufficient(&f, lambda).unwrap())
    );
    let eta = 2.0 * lambda + 0.1;
    let f = TaylorSeries::from_real(&[1.0, eta / 2.0]).unwrap();
    let zero = Complex64::new(-1.0 / eta, 0.0);
    println!(
        "  eta = 2l + 0.1 witness          -> {}; f'({:.4}) = {:.2e}, inside |z| < {:.4}",
        verdict(omega::second_deriv_sufficient(&f, lambda).unwrap()),
        zero.re,
        f.derivative().eval(zero).norm(),
        1.0 / (2.0 * lambda)
    );

    // Radial operator: max |z^2 f'' + z f' - f| <= 3 lambda.
    println!("\nradial-operator test:");
    let f = TaylorSeries::from_real(&[1.0, lambda]).unwrap();
    println!(
        "  z + l z^2 (operator = 3l z^2)   -> {}",
        verdict(omega::operator_sufficient(&f, lambda).unwrap())
    );
    let eta = 3.0 * lambda + 0.1;
    let f = TaylorSeries::from_real(&[1.0, eta / 3.0]).unwrap();
    let zero = Complex64::new(-1.5 / eta, 0.0);
    println!(
        "  eta = 3l + 0.1 witness          -> {}; f'({:.4}) = {:.2e}, inside |z| < {:.4}",
        verdict(omega::operator_sufficient(&f, lambda).unwrap()),
        zero.re,
        f.derivative().eval(zero).norm(),
        1.0 / (2.0 * lambda)
    );
}
