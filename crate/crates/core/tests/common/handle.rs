//! Dehornoy handle reduction: an equality oracle for braid words that shares
//! nothing with the Garside code path.

/// Reduces a word until no handle is left. The word is trivial iff the
/// result is empty.
pub fn handle_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = word.to_vec();
    let mut steps = 0usize;
    while let Some((p, q)) = first_handle(&w) {
        steps += 1;
        assert!(steps < 5_000_000, "handle reduction did not terminate");
        let e = w[p].signum();
        let i = w[p].abs();
        let mut replaced = Vec::with_capacity(w.len());
        replaced.extend_from_slice(&w[..p]);
        for &l in &w[p + 1..q] {
            if l.abs() == i + 1 {
                // σ_{i+1}^f  ->  σ_{i+1}^{-e} σ_i^f σ_{i+1}^{e}
                replaced.push(-e * (i + 1));
                replaced.push(l.signum() * i);
                replaced.push(e * (i + 1));
            } else {
                replaced.push(l);
            }
        }
        replaced.extend_from_slice(&w[q + 1..]);
        w = replaced;
    }
    w
}

/// The handle `σ_i^e … σ_i^{-e}` with the leftmost right end. Its interior
/// holds only letters `σ_j` with `j > i`, and it cannot contain a complete
/// handle, so it is permitted.
fn first_handle(w: &[i32]) -> Option<(usize, usize)> {
    for q in 1..w.len() {
        let i = w[q].abs();
        for p in (0..q).rev() {
            let j = w[p].abs();
            if j < i {
                break;
            }
            if j == i {
                if w[p] == -w[q] {
                    return Some((p, q));
                }
                break;
            }
        }
    }
    None
}

pub fn words_equal(a: &[i32], b: &[i32]) -> bool {
    let mut w = a.to_vec();
    w.extend(b.iter().rev().map(|l| -l));
    handle_reduce(&w).is_empty()
}
