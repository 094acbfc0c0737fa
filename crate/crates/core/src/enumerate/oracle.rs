//! Brute-force isomorphism classes of labelled graphs, independent of the
//! canonical-form search.

use alloc::vec;
use alloc::vec::Vec;

use super::CanonicalForm;
use crate::Error;

/// Largest order accepted by [`enumerate_labeled_oracle`].
pub const LABELED_ORACLE_CAP: usize = 7;

/// Rearranges `perm` into the next permutation in lexicographic order.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).expect("pivot has a successor");
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Position of pair `(i, j)`, `i < j`, counted from the most significant bit.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Every labelled graph on `n` vertices is relabelled by all `n!`
/// permutations and the smallest bitstring kept. Each class is expanded
/// once, from its first labelled member; the rest of its orbit is marked
/// visited. Returns the canonical forms in ascending order.
pub fn enumerate_labeled_oracle(n: usize) -> Result<Vec<CanonicalForm>, Error> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > LABELED_ORACLE_CAP {
        return Err(Error::Capacity { what: "labelled enumeration oracle", n, cap: LABELED_ORACLE_CAP });
    }
    let len = n * (n - 1) / 2;

    // For each permutation, where every bit position lands.
    let mut moves: Vec<Vec<u32>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut table = vec![0u32; len];
        for j in 1..n {
            for i in 0..j {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                table[len - 1 - pair_index(i, j)] = (len - 1 - pair_index(a, b)) as u32;
            }
        }
        moves.push(table);
        if !next_permutation(&mut perm) {
            break;
        }
    }

    let total = 1usize << len;
    let mut visited = vec![0u64; total.div_ceil(64)];
    let mut forms = Vec::new();
    for start in 0..total {
        if visited[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        let mut least = start;
        for table in &moves {
            let mut image = 0usize;
            let mut rest = start;
            while rest != 0 {
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << table[t];
            }
            visited[image / 64] |= 1 << (image % 64);
            least = least.min(image);
        }
        forms.push(CanonicalForm::from_parts(n, least as u128));
    }
    forms.sort_unstable();
    Ok(forms)
}
