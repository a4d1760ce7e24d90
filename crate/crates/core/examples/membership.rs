//! Certify members of the defect classes: named families, random members,
//! and a rejected non-member.
//!
//! Run with: cargo run --example membership

use omega_gft::omega;
use omega_gft::series::TaylorSeries;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // The Möbius-generated family stays within defect 1/2 for every μ.
    println!("Moebius family, defect bound 1/2:");
    for mu in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let f = omega::family_f_mu(mu, 128).unwrap();
        let cert = omega::is_member(&f, 0.5, 1e-9).unwrap();
        println!(
            "  mu = {:5.2}: member = {}, defect = {:.12}, margin = {:+.3e}",
            mu, cert.member, cert.defect, cert.margin
        );
    }

    // The cubic member z + λz²/2 + λz³/4 sits exactly on the boundary.
    println!("\ncubic member z + (l/2)z^2 + (l/4)z^3:");
    for lambda in [0.25, 0.5, 1.0] {
        let f = omega::cubic_member(lambda).unwrap();
        let cert = omega::is_member(&f, lambda, 1e-9).unwrap();
        println!(
            "  lambda = {:4.2}: defect = {:.12} (margin {:+.3e})",
            lambda, cert.defect, cert.margin
        );
    }

    // Random members from the integral generator are certified by design;
    // their defect never exceeds lambda times the multiplier mass.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!("\nfive random members at lambda = 0.5:");
    for _ in 0..5 {
        let f = omega::random_member(&mut rng, 0.5, 64);
        let cert = omega::is_member(&f, 0.5, 1e-9).unwrap();
        println!("  defect = {:.6}, member = {}", cert.defect, cert.member);
    }

    // z + z² has defect exactly 1 and is rejected at lambda = 1/2.
    let bad = TaylorSeries::from_real(&[1.0, 1.0]).unwrap();
    let cert = omega::is_member(&bad, 0.5, 1e-9).unwrap();
    println!(
        "\nz + z^2 at lambda = 0.5: member = {}, defect = {}",
        cert.member, cert.defect
    );
    println!(
        "certificate JSON: {}",
        serde_json::to_string(&cert).unwrap()
    );
}
