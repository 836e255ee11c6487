//! Certify the order from which a chord tuple keeps a fixed girth.

use hbg::girth::spot_check;
use hbg::stabilization;

fn main() -> hbg::Result<()> {
    for (b, chords) in [(1, vec![5]), (1, vec![3]), (8, vec![15, 53, 73, 139, 243, 267, 471, 651])] {
        let cert = stabilization(&chords, b, None)?;
        println!(
            "{chords:?}: girth {} from order {} (winding bound {}, {} orders checked)",
            cert.stable_girth, cert.threshold_order, cert.analytic_order, cert.checked_orders
        );
        for s in spot_check(&cert, &cert.spot_orders(3))? {
            println!("  order {}: girth {} {}", s.order, s.girth, if s.agrees { "ok" } else { "MISMATCH" });
        }
    }
    Ok(())
}
