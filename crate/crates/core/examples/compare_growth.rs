//! Pairwise growth-rate differences between lattices.
//!
//! cargo run --example compare_growth

use asymfit::metrics::growth_differences;
use asymfit::numerics::Number;

fn main() {
    let rates = [
        ("rect-d2", Number::ratio(24195, 10000)),
        ("th", Number::ratio(24649, 10000)),
        ("bcc3", Number::ratio(32884, 10000)),
        ("rect-d4", Number::ratio(33087, 10000)),
    ]
    .map(|(name, k)| (name.to_string(), k));
    for d in growth_differences(&rates) {
        println!("{:8} {:8} {}", d.first, d.second, d.difference.display_sig(4));
    }
}
