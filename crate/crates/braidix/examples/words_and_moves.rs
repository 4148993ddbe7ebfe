//! Braid words and the elementary moves: parsing, exponent sums, closure
//! permutations, and the Markov moves.

use braidix::word::Move;
use braidix::BraidWord;

fn main() {
    let trefoil: BraidWord = "1 1 1".parse().unwrap();
    println!(
        "word {trefoil}: {} strands, writhe {}",
        trefoil.strands(),
        trefoil.exponent_sum()
    );
    println!("closure components: {}", trefoil.closure_components());

    // the defining Yang-Baxter relation
    let lhs: BraidWord = "1 2 1".parse().unwrap();
    for neighbor in lhs.neighbors(&[Move::YbForward]) {
        println!("{lhs}  ->  {neighbor}");
    }

    // stabilization and its inverse
    let up = trefoil.stabilize(1);
    println!("stabilized: {up} (strands {})", up.strands());
    println!("destabilized again: {}", up.destabilize().unwrap());

    // distant generators commute
    let far: BraidWord = "1 3".parse().unwrap();
    println!("{far} commutes to {}", far.neighbors(&[Move::Commute])[0]);

    // a 21-letter 4-braid with 16 positive and 5 negative letters
    let mixed: BraidWord = "1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2"
        .parse()
        .unwrap();
    println!(
        "mixed word: {} letters, writhe {}, knot: {}",
        mixed.len(),
        mixed.exponent_sum(),
        mixed.closure_components() == 1
    );
}
