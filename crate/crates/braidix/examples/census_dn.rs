//! The d_n table: minimal crossing numbers of irreducible positive braids,
//! certified layer by layer.

use braidix::census::{dn_pipeline, DnOptions, LayerOutcome};

fn main() {
    let opts = DnOptions::default();
    for (n, max_c) in [(2usize, 5usize), (3, 9), (4, 11), (6, 19)] {
        let report = dn_pipeline(n, max_c, &opts).unwrap();
        match report.value {
            Some(v) => println!("d_{n} = {v}"),
            None => println!("d_{n}: not certified"),
        }
        for (c, layer) in &report.layers {
            match layer {
                LayerOutcome::FullyReducible { knot_words } => {
                    println!("  {c} crossings: fully reducible ({knot_words} prime knot words)")
                }
                LayerOutcome::Witness { word, by_unity_root, by_sharp_mwf } => println!(
                    "  {c} crossings: witness {word} (unity root {by_unity_root}, sharp MWF {by_sharp_mwf})"
                ),
                LayerOutcome::Unresolved { knot_words, stuck } => {
                    println!("  {c} crossings: {stuck}/{knot_words} unresolved")
                }
            }
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
}
