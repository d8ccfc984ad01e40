use num_bigint::BigUint;

use crate::families::{Chirality, Edge, EdgeWord};

use super::{check_n, necklace_sum, CombinatoricsError};

/// Largest number of edge-word necklaces that will be listed.
pub const MEMBER_LIMIT: u64 = 1_000_000;

/// One member of `C_{n,k}^t`: a canonical edge word and a handedness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Member {
    pub word: EdgeWord,
    pub chirality: Chirality,
}

/// Lists every member of `C_{n,k}^t`: for each number `i` of long edges,
/// the least rotations of all words with `i` long and `(2n − i)k` short
/// edges, each in both handednesses.
pub fn enumerate_members(n: u32, k: u32) -> Result<Vec<Member>, CombinatoricsError> {
    check_n(n)?;
    if k == 0 {
        return Err(CombinatoricsError::InvalidK);
    }
    let both = |word: EdgeWord| {
        [Chirality::A, Chirality::B].map(|chirality| Member {
            word: word.clone(),
            chirality,
        })
    };
    if k == 1 {
        // Flipping a whole wedge leaves it unchanged, so only the mirror
        // pair remains.
        return Ok(both(EdgeWord::all_short(n, 1)).to_vec());
    }
    let count = necklace_sum(n, k)?;
    if count > BigUint::from(MEMBER_LIMIT) {
        return Err(CombinatoricsError::TooMany {
            count,
            limit: MEMBER_LIMIT,
        });
    }
    let mut out = Vec::new();
    for i in 0..=2 * n {
        for word in fixed_content_necklaces(i as usize, ((2 * n - i) * k) as usize) {
            out.extend(both(word));
        }
    }
    Ok(out)
}

/// Least rotations of all words with `longs` L's and `shorts` S's, in
/// lexicographic order with `L < S`.
pub(crate) fn fixed_content_necklaces(longs: usize, shorts: usize) -> Vec<EdgeWord> {
    let len = longs + shorts;
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut word = vec![Edge::Long; len];
    let mut left = [longs, shorts];
    walk(1, 1, &mut word, &mut left, &mut out);
    out
}

/// Prenecklace recursion: `word[..t-1]` is a prenecklace whose longest
/// Lyndon prefix has length `p`. Branches run out of letters instead of
/// producing the wrong content.
fn walk(t: usize, p: usize, word: &mut [Edge], left: &mut [usize; 2], out: &mut Vec<EdgeWord>) {
    let len = word.len();
    if t > len {
        if len.is_multiple_of(p) {
            out.push(EdgeWord::new(word.to_vec()));
        }
        return;
    }
    let floor = if t == 1 { Edge::Long } else { word[t - 1 - p] };
    for (idx, letter) in [Edge::Long, Edge::Short].into_iter().enumerate() {
        if letter < floor || left[idx] == 0 {
            continue;
        }
        left[idx] -= 1;
        word[t - 1] = letter;
        let next_p = if t == 1 || letter != floor { t } else { p };
        walk(t + 1, next_p, word, left, out);
        left[idx] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{count_c, necklace};

    #[test]
    fn slices_match_necklace_numbers() {
        for (a, b) in [(3, 6), (0, 4), (4, 0), (2, 8), (5, 5)] {
            let words = fixed_content_necklaces(a, b);
            assert_eq!(BigUint::from(words.len()), necklace(a as u32, b as u32).unwrap(), "{a} {b}");
            for w in &words {
                assert_eq!(w.long_count(), a);
                assert_eq!(*w, w.canonical());
            }
        }
    }

    #[test]
    fn member_counts() {
        assert_eq!(enumerate_members(3, 1).unwrap().len(), 2);
        for (n, k) in [(3, 2), (3, 3), (5, 2)] {
            assert_eq!(BigUint::from(enumerate_members(n, k).unwrap().len()), count_c(n, k).unwrap());
        }
    }

    #[test]
    fn guard_trips() {
        assert!(matches!(enumerate_members(11, 5), Err(CombinatoricsError::TooMany { .. })));
    }
}
