//! The series toolbox underneath everything else: evaluation, derivatives,
//! defects, partial sums and tails, reciprocals, and the JSON coefficient
//! format.
//!
//! Run with: cargo run --example series_arithmetic

use num_complex::Complex64;
use omega_gft::series::TaylorSeries;

fn main() {
    // f_0(z) = z + z^3/4, the odd cubic member.
    let f = TaylorSeries::from_real(&[1.0, 0.0, 0.25]).unwrap();
    let z = Complex64::new(0.3, 0.4);
    println!("f(z) = z + z^3/4 at z = {}: {}", z, f.eval(z));

    // The defect zf' - f of z + (l/2)z^2 + (l/4)z^3 is (l/2)z^2(1 + z).
    let l = 0.8;
    let g = TaylorSeries::from_real(&[1.0, l / 2.0, l / 4.0])
        .unwrap()
        .defect_series();
    println!(
        "defect coefficients of the cubic member: {:?}",
        g.coeffs().iter().map(|c| c.re).collect::<Vec<_>>()
    );

    // Partial sum and tail recombine to f exactly.
    let f = TaylorSeries::from_real(&[1.0, 0.5, -0.2, 0.1, 0.05]).unwrap();
    let (s, t) = (f.partial_sum(3), f.tail(3));
    let back: Vec<f64> = (1..=f.degree())
        .map(|k| (s.coeff(k) + t.coeff(k)).re)
        .collect();
    println!("s_3 + rho_3 coefficients: {:?}", back);

    // Reciprocal of f': multiply back and watch the identity appear.
    let p = f.derivative();
    let q = p.reciprocal(8).unwrap();
    let prod = p.mul_truncated(&q, 8);
    println!(
        "f' * (1/f') coefficients: {:?}",
        prod.coeffs()
            .iter()
            .map(|c| format!("{:.2e}", c.norm()))
            .collect::<Vec<_>>()
    );

    // JSON round trip (the CLI file format).
    let text = f.to_json();
    println!("coefficient file: {}", text);
    assert_eq!(TaylorSeries::from_json(&text).unwrap(), f);
    println!("round trip: ok");
}
