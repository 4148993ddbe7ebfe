//! Reduction searches: destabilizing positive words, three-move
//! triviality, and the rigid family where positive moves provably stall.

use braidix::census::{
    dn_upper_family, irreducible_certificate, reduction_search, rigid_family, three_move_reduce,
};
use braidix::invariants::homfly;
use braidix::{tables, BraidWord};

fn main() {
    // an easy one: (σ1σ2)² is the trefoil on three strands
    let square: BraidWord = "1 2 1 2".parse().unwrap();
    let r = reduction_search(&square, 5_000).unwrap();
    println!(
        "{square} reduces to {} ({} strands)",
        r.best_word,
        r.best_word.strands()
    );

    // the three-move certificate family
    for n in 4..=7 {
        let word = dn_upper_family(n).unwrap();
        println!(
            "family word at n = {n}: {} letters, empties under 3-moves: {}",
            word.len(),
            three_move_reduce(&word)
        );
    }

    // σ1³ is certified irreducible, its stabilization is not
    println!(
        "certificate for σ1³: {}",
        irreducible_certificate(&"1 1 1".parse().unwrap()).unwrap()
    );
    println!(
        "certificate for σ1³σ2: {}",
        irreducible_certificate(&"1 1 1 2".parse().unwrap()).unwrap()
    );

    // the rigid 20-letter word: no Yang-Baxter move exists anywhere in its
    // commutation class, so positive moves never destabilize it, although
    // its closure equals that of a 19-crossing 6-braid
    let rigid = rigid_family(7).unwrap();
    let target = tables::irreducible_19_crossing_6_braid();
    println!(
        "\nrigid word {rigid}\nhas the same skein polynomial as {target}: {}",
        homfly(&rigid).unwrap() == homfly(&target).unwrap()
    );
    let stuck = reduction_search(&rigid, 50_000).unwrap();
    println!(
        "positive-move search stays at ({} strands, {} letters)",
        stuck.best_word.strands(),
        stuck.best_word.len()
    );
}
