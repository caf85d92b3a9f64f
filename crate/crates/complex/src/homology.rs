use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Betti {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
}

/// Rank of an integer matrix over the rationals.
pub fn rank_over_q(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / &m[rank][c];
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let k = m[r][c].clone();
                let pivot = m[rank].clone();
                for (x, y) in m[r][c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x = &*x - &(&k * y);
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

pub fn betti_numbers(c: &Complex) -> Betti {
    let (nv, ne, nf) = (c.vertices.len(), c.edges.len(), c.faces.len());
    let d1: Vec<Vec<i64>> = c
        .edges
        .iter()
        .map(|e| {
            let mut row = vec![0i64; nv];
            row[e.ends[1]] += 1;
            row[e.ends[0]] -= 1;
            row
        })
        .collect();
    let d2: Vec<Vec<i64>> = c
        .faces
        .iter()
        .map(|f| {
            let mut row = vec![0i64; ne];
            for d in &f.boundary {
                row[d.edge] += if d.forward { 1 } else { -1 };
            }
            row
        })
        .collect();
    let r1 = rank_over_q(&d1);
    let r2 = rank_over_q(&d2);
    Betti { b0: nv - r1, b1: ne - r1 - r2, b2: nf - r2 }
}

impl Complex {
    pub fn betti(&self) -> Betti {
        betti_numbers(self)
    }
}
