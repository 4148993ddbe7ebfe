use braidix::census::{dn_pipeline, DnOptions, LayerOutcome};
use std::time::Instant;
fn main() {
    let t0 = Instant::now();
    eprintln!("start d_5 sweep");
    let r = dn_pipeline(5, 16, &DnOptions::default()).unwrap();
    eprintln!("d_5 finished in {:?}: value = {:?}", t0.elapsed(), r.value);
    for (c, layer) in &r.layers {
        match layer {
            LayerOutcome::Witness { word, by_unity_root, by_sharp_mwf } => {
                eprintln!("  layer {c}: witness {word} unity={by_unity_root} mwf={by_sharp_mwf}")
            }
            other => eprintln!("  layer {c}: {other:?}"),
        }
    }
    for n in &r.notes {
        eprintln!("  note: {n}");
    }
}
