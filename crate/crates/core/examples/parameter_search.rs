//! Admissible LRC-LCD parameters as CSV.
//!
//! cargo run --release --example parameter_search

use lrc_lcd::constructions::{parameter_search, SEARCH_CSV_HEADER};

fn main() {
    println!("{SEARCH_CSV_HEADER}");
    for (q, n) in [(37, 36..=36), (17, 16..=16), (2, 15..=15)] {
        for row in parameter_search(q, n, 1..=8) {
            println!("{}", row.csv());
        }
    }
}
