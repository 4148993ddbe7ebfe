//! The achirality argument for 14_45759: plain MWF gives 3, the 2-cable
//! gives 4, and the forced writhe pair ±1 contradicts the cable span, so
//! the braid index is at least 5 — beyond every one-shot polynomial bound.

use braidix::criteria::{
    admissible_writhes, cable_contradiction_test, cabled_mwf_bound, mwf_bound, writhe_spread_bound,
};
use braidix::invariants::is_v_self_conjugate;
use braidix::tables;

fn main() {
    let p = tables::p_14_45759();
    let cable = tables::p_14_45759_two_cable();

    println!("MWF bound: {}", mwf_bound(&p).unwrap());
    println!(
        "2-cable MWF bound: {}",
        cabled_mwf_bound(&cable, 2).unwrap()
    );

    let window = admissible_writhes(&p, 4).unwrap();
    println!("4-strand writhe window: {:?}", window.values());
    println!(
        "P is v-self-conjugate (achiral knot): {}",
        is_v_self_conjugate(&p)
    );
    println!(
        "allowed writhe spread on 4 strands: {}",
        writhe_spread_bound(&p, 4).unwrap()
    );

    let contradiction = cable_contradiction_test(&cable, 2, 4, 1, -1).unwrap();
    println!("cable span contradicts writhes +1 and -1 on 4 strands: {contradiction}");
    println!("=> braid index at least 5");
}
