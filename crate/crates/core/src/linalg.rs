//! Exact rank of sparse rational matrices.
//!
//! Rows are scaled to primitive integer vectors and reduced against an
//! echelon set with fraction-free updates `r <- p·r - c·pivot`, followed by
//! removal of the row content. No division by a pivot ever happens, so the
//! rank is exact.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, Scalar)>>,
}

type IntRow = BTreeMap<usize, BigInt>;

impl SparseMatrix {
    /// Builds a matrix whose columns are the union of keys, in key order.
    /// Returns the matrix and the column labels.
    pub fn from_vectors<K, I>(vectors: I) -> (Self, Vec<K>)
    where
        K: Ord + Clone,
        I: IntoIterator<Item = Vec<(K, Scalar)>>,
    {
        let vectors: Vec<Vec<(K, Scalar)>> = vectors.into_iter().collect();
        let labels: Vec<K> = vectors
            .iter()
            .flat_map(|v| v.iter().map(|(k, _)| k.clone()))
            .collect::<BTreeSet<K>>()
            .into_iter()
            .collect();
        let index: BTreeMap<&K, usize> = labels.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let rows = vectors
            .iter()
            .map(|v| {
                let mut row: Vec<(usize, Scalar)> = v
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (index[k], c.clone()))
                    .collect();
                row.sort_by_key(|(i, _)| *i);
                row
            })
            .collect();
        (
            SparseMatrix {
                cols: labels.len(),
                rows,
            },
            labels,
        )
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rank(&self) -> usize {
        let mut pivots: HashMap<usize, IntRow> = HashMap::new();
        for row in &self.rows {
            let mut r = primitive_integer_row(row);
            loop {
                let Some((&lead, _)) = r.iter().next() else {
                    break;
                };
                match pivots.get(&lead) {
                    None => {
                        pivots.insert(lead, r);
                        break;
                    }
                    Some(p) => {
                        let pc = &p[&lead];
                        let rc = r[&lead].clone();
                        r = combine(&r, pc, p, &rc);
                    }
                }
            }
        }
        pivots.len()
    }

    /// Sparse triplet dump: a header line then one `row col value` per entry.
    pub fn triplets(&self) -> String {
        let mut out = format!("% {} {} {}\n", self.rows.len(), self.cols, self.nnz());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                let _ = writeln!(out, "{i} {j} {}", scalar::render(c));
            }
        }
        out
    }
}

fn primitive_integer_row(row: &[(usize, Scalar)]) -> IntRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints: IntRow = row
        .iter()
        .map(|(j, c)| (*j, c.numer() * (&lcm / c.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut r: IntRow) -> IntRow {
    let g = r.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in r.values_mut() {
            *v /= &g;
        }
    }
    if r.values().next().is_some_and(|v| v.is_negative()) {
        for v in r.values_mut() {
            *v = -&*v;
        }
    }
    r
}

/// `pc·r - rc·p`, with the content removed.
fn combine(r: &IntRow, pc: &BigInt, p: &IntRow, rc: &BigInt) -> IntRow {
    let mut out: IntRow = r.iter().map(|(j, v)| (*j, v * pc)).collect();
    for (j, v) in p {
        let entry = out.entry(*j).or_insert_with(BigInt::zero);
        *entry -= v * rc;
        if entry.is_zero() {
            out.remove(j);
        }
    }
    make_primitive(out)
}

/// Exact rank of a family of sparse vectors indexed by arbitrary ordered keys.
pub fn rank_of<K, I>(vectors: I) -> usize
where
    K: Ord + Clone,
    I: IntoIterator<Item = Vec<(K, Scalar)>>,
{
    SparseMatrix::from_vectors(vectors).0.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn dense_rank_oracle(m: &[Vec<Scalar>]) -> usize {
        // Plain rational Gauss-Jordan with division, for cross-checking.
        let mut a: Vec<Vec<Scalar>> = m.to_vec();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][c].clone();
            for r in 0..rows {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &pivot;
                    for k in 0..cols {
                        let v = &a[rank][k] * &f;
                        a[r][k] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let v = |xs: &[(usize, Scalar)]| xs.to_vec();
        assert_eq!(rank_of::<usize, _>(Vec::<Vec<(usize, Scalar)>>::new()), 0);
        assert_eq!(rank_of(vec![v(&[(0, int(1)), (1, int(2))]), v(&[(0, int(2)), (1, int(4))])]), 1);
        assert_eq!(
            rank_of(vec![
                v(&[(0, frac(1, 2)), (2, int(1))]),
                v(&[(1, int(3))]),
                v(&[(0, int(1)), (1, int(3)), (2, int(2))]),
            ]),
            2
        );
    }

    #[test]
    fn agrees_with_dense_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let dense: Vec<Vec<Scalar>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            if rng.gen_bool(0.4) {
                                int(0)
                            } else {
                                frac(rng.gen_range(-3..4), rng.gen_range(1..4))
                            }
                        })
                        .collect()
                })
                .collect();
            let sparse = dense.iter().map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
                    .collect::<Vec<_>>()
            });
            assert_eq!(rank_of(sparse), dense_rank_oracle(&dense));
        }
    }

    #[test]
    fn triplet_dump() {
        let (m, labels) = SparseMatrix::from_vectors(vec![vec![("b", frac(1, 2))], vec![("a", int(1))]]);
        assert_eq!(labels, vec!["a", "b"]);
        assert_eq!(m.triplets(), "% 2 2 2\n0 1 1/2\n1 0 1\n");
    }
}
