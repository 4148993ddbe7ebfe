//! Skein, Jones and Alexander polynomials of some small closures.

use braidix::invariants::{alexander, degree_stats, homfly, jones, jones_bracket};
use braidix::BraidWord;

fn main() {
    for text in ["1", "1 1 1", "1 -2 1 -2", "1 1 1 1 1"] {
        let word: BraidWord = text.parse().unwrap();
        let p = homfly(&word).unwrap();
        println!("closure of {word}:");
        print!("{}", p.to_lines());
        let stats = degree_stats(&p).unwrap();
        println!(
            "  min deg_v {}  max deg_v {}  span {}  max deg_z {}",
            stats.min_deg_v, stats.max_deg_v, stats.span_v, stats.max_deg_z
        );
        let v = jones(&word).unwrap();
        println!("  V in t: {}", v.halve_exponents().unwrap().render("t"));
        // the planar-basis path computes the same polynomial
        assert_eq!(v, jones_bracket(&word).unwrap());
        if word.closure_components() == 1 {
            println!(
                "  Delta in t: {}",
                alexander(&word).unwrap().halve_exponents().unwrap()
            );
        }
        println!();
    }
}
