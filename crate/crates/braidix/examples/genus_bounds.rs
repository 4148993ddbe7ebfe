//! The genus/degree counterexample: a 4-braid whose positive band surface
//! pins the genus at 4 while min deg_v P = 10 > 8 = 1 − χ.

use braidix::genus::{band_parse_search, bennequin_lower, morton_conjecture_check};
use braidix::invariants::homfly;
use braidix::tables;

fn main() {
    let word = tables::morton_violation_word();
    println!("word: {word}");
    println!(
        "strands {}, letters {}, writhe {}",
        word.strands(),
        word.len(),
        word.exponent_sum()
    );

    let bands = band_parse_search(&word, 5_000).unwrap();
    println!(
        "band presentation: {} positive bands on {} discs => 1 - chi <= {}",
        bands.band_count(),
        bands.strands,
        bands.one_minus_chi()
    );
    println!(
        "Bennequin lower bound: 1 - chi >= {}",
        bennequin_lower(&word)
    );

    let p = homfly(&word).unwrap();
    println!("min deg_v P = {}", p.min_deg_v().unwrap());
    println!("verdict: {:?}", morton_conjecture_check(&word, &p).unwrap());

    println!("\nseven further words with the same pattern:");
    for extra in tables::morton_violation_extras() {
        let bands = band_parse_search(&extra, 5_000).unwrap();
        let p = homfly(&extra).unwrap();
        println!(
            "  {} bands, writhe {}, min deg_v {}",
            bands.band_count(),
            extra.exponent_sum(),
            p.min_deg_v().unwrap()
        );
    }
}
