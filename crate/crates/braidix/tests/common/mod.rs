//! Shared test support: an independent word-level skein oracle.
//!
//! The oracle computes the skein polynomial of a braid closure by resolving
//! crossings toward a descending diagram: walking the closure component by
//! component, the first crossing reached through its under-strand is
//! resolved via the skein relation, and a fully descending closure is an
//! unlink. This shares no code or algorithmic idea with the crate's
//! permutation-basis engine, which is the point.

use braidix::poly::LaurentPoly2;
use braidix::BraidWord;

/// `δ = (v^{-1} − v)/z`.
fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms(&[(-1, -1, 1), (1, -1, -1)])
}

fn delta_pow(k: usize) -> LaurentPoly2 {
    let mut out = LaurentPoly2::one();
    for _ in 0..k {
        out = out.mul(&delta()).unwrap();
    }
    out
}

/// Indices of letters whose first visit in the closure walk arrives on the
/// under-strand. The walk starts each component at its least top position,
/// components ordered by that position.
fn bad_crossings(w: &BraidWord) -> Vec<usize> {
    let n = w.strands();
    let perm = w.permutation();
    let mut first_pass_over: Vec<Option<bool>> = vec![None; w.len()];
    let mut visited_top = vec![false; n];
    for start in 0..n {
        if visited_top[start] {
            continue;
        }
        let mut top = start;
        loop {
            visited_top[top] = true;
            let mut pos = top;
            for (j, letter) in w.letters().iter().enumerate() {
                let i = letter.index() - 1; // 0-based slot
                if pos == i || pos == i + 1 {
                    // over-strand of a positive crossing enters at slot i
                    let over = (pos == i) == (letter.sign() > 0);
                    if first_pass_over[j].is_none() {
                        first_pass_over[j] = Some(over);
                    }
                    pos = if pos == i { i + 1 } else { i };
                }
            }
            top = perm.image(top);
            if top == start {
                break;
            }
        }
    }
    first_pass_over
        .iter()
        .enumerate()
        .filter_map(|(j, over)| match over {
            Some(false) => Some(j),
            _ => None,
        })
        .collect()
}

/// Cancel adjacent inverse pairs across the cyclic word.
fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut vals = w.values();
    loop {
        let m = vals.len();
        if m < 2 {
            break;
        }
        let mut hit = None;
        for p in 0..m {
            if vals[p] == -vals[(p + 1) % m] {
                hit = Some(p);
                break;
            }
        }
        match hit {
            Some(p) if p + 1 < m => {
                vals.drain(p..p + 2);
            }
            Some(_) => {
                vals.pop();
                vals.remove(0);
            }
            None => break,
        }
    }
    BraidWord::from_values(&vals, Some(w.strands())).unwrap()
}

/// Split at unused generators: the closure is a distant union of the
/// closures of the strand-interval blocks.
fn split_blocks(w: &BraidWord) -> Option<Vec<BraidWord>> {
    let counts = w.letter_counts();
    let n = w.strands();
    if (1..n).all(|i| counts[i] > 0) {
        return None;
    }
    let mut blocks = Vec::new();
    let mut lo = 0usize; // 0-based strand interval start
    for cut in 1..=n {
        let boundary = cut == n || counts[cut] == 0;
        if !boundary {
            continue;
        }
        // strands lo..cut form a block; keep letters with index in
        // (lo, cut), reindexed
        let vals: Vec<i16> = w
            .letters()
            .iter()
            .filter(|l| l.index() > lo && l.index() < cut)
            .map(|l| (l.index() - lo) as i16 * l.sign() as i16)
            .collect();
        blocks.push(BraidWord::from_values(&vals, Some(cut - lo)).unwrap());
        lo = cut;
        if cut == n {
            break;
        }
    }
    Some(blocks)
}

pub fn oracle_homfly(w: &BraidWord) -> LaurentPoly2 {
    let w = free_reduce(w);
    if let Some(blocks) = split_blocks(&w) {
        let mut p = delta_pow(blocks.len() - 1);
        for b in blocks {
            p = p.mul(&oracle_homfly(&b)).unwrap();
        }
        return p;
    }
    if let Some(d) = w.destabilize() {
        return oracle_homfly(&d);
    }
    if let Some(d) = w.destabilize_bottom() {
        return oracle_homfly(&d);
    }
    if w.is_empty() {
        return delta_pow(w.strands() - 1);
    }
    let bad = bad_crossings(&w);
    let Some(&j) = bad.first() else {
        // descending closure: an unlink, one unknot per component
        return delta_pow(w.closure_components() - 1);
    };
    let mut switched = w.values();
    switched[j] = -switched[j];
    let mut deleted = w.values();
    deleted.remove(j);
    let sw = BraidWord::from_values(&switched, Some(w.strands())).unwrap();
    let de = BraidWord::from_values(&deleted, Some(w.strands())).unwrap();
    let sign = w.letters()[j].sign();
    let mut a = oracle_homfly(&sw);
    let mut b = oracle_homfly(&de);
    if sign > 0 {
        // P(+) = v² P(−) + vz P(0)
        a.mul_monomial_assign(2, 0, 1).unwrap();
        b.mul_monomial_assign(1, 1, 1).unwrap();
    } else {
        // P(−) = v^{-2} P(+) − v^{-1}z P(0)
        a.mul_monomial_assign(-2, 0, 1).unwrap();
        b.mul_monomial_assign(-1, 1, -1).unwrap();
    }
    a.add(&b).unwrap()
}
