//! Hadamard convolution keeps the defect classes closed for lambda <= 1:
//! the coefficientwise product of two members is again a member.
//!
//! Run with: cargo run --example convolution_closure

use omega_gft::omega;
use omega_gft::series::TaylorSeries;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // Exact witness: (z + lz^2) * (z + lz^2) = z + l^2 z^2.
    let l = 0.8;
    let f = TaylorSeries::from_real(&[1.0, l]).unwrap();
    let h = f.convolve(&f);
    println!(
        "(z + {l}z^2) * (z + {l}z^2) has a_2 = {} (= lambda^2)",
        h.coeff(2).re
    );

    // Random pairs: the convolution defect is at most the product of the
    // factors' defects divided by lambda, comfortably below lambda.
    for lambda in [0.5, 1.0] {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        println!("\nlambda = {lambda}: defect of f, g, and f*g over five random pairs");
        for _ in 0..5 {
            let f = omega::random_member(&mut rng, lambda, 48);
            let g = omega::random_member(&mut rng, lambda, 48);
            let fg = f.convolve(&g);
            let df = omega::boundary_defect(&f, 1024);
            let dg = omega::boundary_defect(&g, 1024);
            let dfg = omega::boundary_defect(&fg, 1024);
            println!(
                "  {:.6}  {:.6}  ->  {:.6}   (member: {})",
                df,
                dg,
                dfg,
                dfg <= lambda + 1e-9
            );
        }
    }

    // Convolving with the identity truncates to degree one: z * f = z.
    let f = omega::family_f_mu(0.5, 16).unwrap();
    let z = TaylorSeries::identity();
    println!(
        "\nidentity convolution: z * f has degree {}",
        z.convolve(&f).degree()
    );
}
