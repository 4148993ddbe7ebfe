//! Build the (2,7)-cable of the trefoil as a braid and check its Jones
//! polynomial against the published line for 13_9465.

use braidix::cabling::{cable_word, half_twist, parallel_substitute, CablePattern};
use braidix::invariants::{homfly, jones_from_homfly};
use braidix::{tables, BraidWord};

fn main() {
    let trefoil: BraidWord = "1 1 1".parse().unwrap();

    // half twists and the parallel substitution
    println!("half twist on 4 strands: {}", half_twist(4).unwrap());
    let doubled = parallel_substitute(&trefoil, 2).unwrap();
    println!(
        "2-parallel of the trefoil: {doubled} (writhe {} = 4x{})",
        doubled.exponent_sum(),
        trefoil.exponent_sum()
    );

    // the zero-framed satellite with pattern σ1^7
    let pattern = CablePattern::twisted(2, 7).unwrap();
    let cable = cable_word(&trefoil, &pattern).unwrap();
    println!(
        "cable word: {cable}\n  ({} strands, {} letters, writhe {})",
        cable.strands(),
        cable.len(),
        cable.exponent_sum()
    );

    let p = homfly(&cable).unwrap();
    let v = jones_from_homfly(&p).unwrap();
    assert_eq!(v, tables::v_13_9465());
    assert_eq!(p, tables::p_13_9465());
    println!("V and P match the published values for 13_9465 = (3_1)_{{2,7}}");
}
