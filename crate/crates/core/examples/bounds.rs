//! Known bounds on trivalent cage orders.

use hbg::catalog::{bounds_table, reference_bounds, KNOWN_CAGES};

fn main() {
    for b in bounds_table() {
        if b.is_exact() {
            println!("n(3,{}) = {} ({})", b.girth, b.lower, b.attribution);
        } else {
            println!("{} <= n(3,{}) <= {} ({})", b.lower, b.girth, b.upper, b.attribution);
        }
    }
    println!("cages: {KNOWN_CAGES:?}");
    println!("{}", reference_bounds(40).unwrap_err());
}
