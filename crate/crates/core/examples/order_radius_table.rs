//! The order-versus-radius table: for each n, the worst-case radius inside
//! which Re(s_n') > 0 for every member at defect bound 1/2. Emits CSV and
//! points out the plateau.
//!
//! Run with: cargo run --example order_radius_table

use omega_gft::bounds;
use omega_gft::roots;

fn main() {
    let rows = bounds::figure1_data(2, 40).unwrap();
    print!("{}", bounds::figure1_csv(&rows));

    match bounds::figure1_plateau(&rows, 1e-4) {
        Some(n) => println!("# plateau: successive difference < 1e-4 from n = {}", n),
        None => println!("# no plateau in range"),
    }
    let ctc = roots::named_radius("ctc_2_5").unwrap().root;
    println!("# limiting value (close-to-convexity root): {:.10}", ctc);
    println!(
        "# radius(40) - limit = {:+.3e}",
        rows.last().unwrap().radius - ctc
    );
}
