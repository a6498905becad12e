//! Exact dense linear algebra over rational functions.

use super::ratfn::RationalFn;

/// Reduce `m` (rows of equal length) to reduced row-echelon form in place;
/// returns the pivot column indices.
pub fn rref(m: &mut [Vec<RationalFn>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        // Pick the structurally simplest nonzero pivot to keep the
        // rational-function entries small.
        let pivot = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].complexity());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix.
pub fn rank(m: &[Vec<RationalFn>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Solve `A x = b` exactly; `None` when inconsistent.  Free variables are
/// set to zero.
pub fn solve(a: &[Vec<RationalFn>], b: &[RationalFn]) -> Option<Vec<RationalFn>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut aug: Vec<Vec<RationalFn>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let zero = b
        .iter()
        .chain(a.iter().flatten())
        .next()
        .map(|f| RationalFn::zero(f.alphabet()))
        .expect("nonempty system");
    let mut x = vec![zero; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Alphabet;
    use std::sync::Arc;

    fn c(alph: &Arc<Alphabet>, n: i64) -> RationalFn {
        RationalFn::from_int(alph, n)
    }

    #[test]
    fn solve_and_rank() {
        let alph = Alphabet::real(&[]);
        let a = vec![
            vec![c(&alph, 1), c(&alph, 2)],
            vec![c(&alph, 3), c(&alph, 4)],
        ];
        let b = vec![c(&alph, 5), c(&alph, 11)];
        let x = solve(&a, &b).unwrap();
        assert!(x[0].sub(&c(&alph, 1)).is_zero());
        assert!(x[1].sub(&c(&alph, 2)).is_zero());
        assert_eq!(rank(&a), 2);

        let sing = vec![
            vec![c(&alph, 1), c(&alph, 2)],
            vec![c(&alph, 2), c(&alph, 4)],
        ];
        assert_eq!(rank(&sing), 1);
        assert!(solve(&sing, &[c(&alph, 1), c(&alph, 3)]).is_none());
        assert!(solve(&sing, &[c(&alph, 1), c(&alph, 2)]).is_some());
    }
}
