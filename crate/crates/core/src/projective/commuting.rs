//! Seeded commuting pairs for exercising [`commuting_to_aff`](super::commuting_to_aff).

use super::Mat3;
use crate::sampling::{self, SampleRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `B` a random quadratic polynomial in a random `A`.
    Polynomial,
    /// `A` has a complex eigenpair.
    ComplexPair,
    /// `A` has a repeated eigenvalue with a 2×2 Jordan block.
    Defective,
    /// `A = λI + N` with `N` nilpotent of rank 1 or 2.
    Triple,
    /// `A` has a repeated eigenvalue on a 2-plane and `B` acts freely on it.
    DoublePlane,
    /// `A` scalar, `B` arbitrary.
    Scalar,
}

const KINDS: [PairKind; 8] = [
    PairKind::Polynomial,
    PairKind::Polynomial,
    PairKind::Polynomial,
    PairKind::ComplexPair,
    PairKind::Defective,
    PairKind::Triple,
    PairKind::DoublePlane,
    PairKind::Scalar,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutingPair {
    pub kind: PairKind,
    pub a: Mat3,
    pub b: Mat3,
}

fn random_matrix(rng: &mut SampleRng, lo: f64, hi: f64) -> Mat3 {
    Mat3::from_fn(|_, _| sampling::uniform(rng, lo, hi))
}

/// A well-conditioned random change of basis.
fn random_basis(rng: &mut SampleRng) -> (Mat3, Mat3) {
    let p = Mat3::identity() * 1.5 + random_matrix(rng, -0.5, 0.5);
    let inv = p.try_inverse().expect("diagonally dominant");
    (p, inv)
}

fn polynomial(rng: &mut SampleRng, a: &Mat3) -> Mat3 {
    let c: [f64; 3] = std::array::from_fn(|_| sampling::uniform(rng, -2.0, 2.0));
    Mat3::identity() * c[0] + a * c[1] + a * a * c[2]
}

/// `count` pairs cycling through the [`PairKind`]s (generic polynomial pairs
/// make up three eighths).
pub fn sample_commuting_pairs(rng: &mut SampleRng, count: usize) -> Vec<CommutingPair> {
    (0..count)
        .map(|k| {
            let kind = KINDS[k % KINDS.len()];
            let mut u = |lo, hi| sampling::uniform(rng, lo, hi);
            let (l0, l1, l2) = (u(-2.0, 2.0), u(-2.0, 2.0), u(-2.0, 2.0));
            let (re, im) = (u(-2.0, 2.0), u(0.2, 2.0));
            let n_rank2 = u(0.0, 1.0) < 0.5;
            let (a, b) = match kind {
                PairKind::Polynomial => {
                    let a = random_matrix(rng, -2.0, 2.0);
                    (a, polynomial(rng, &a))
                }
                PairKind::ComplexPair => {
                    let (p, inv) = random_basis(rng);
                    let a = p * Mat3::new(re, -im, 0.0, im, re, 0.0, 0.0, 0.0, l0) * inv;
                    (a, polynomial(rng, &a))
                }
                PairKind::Defective => {
                    let (p, inv) = random_basis(rng);
                    let a = p
                        * Mat3::new(l0, 1.0, 0.0, 0.0, l0, 0.0, 0.0, 0.0, l0 + 1.0 + l1.abs())
                        * inv;
                    (a, polynomial(rng, &a))
                }
                PairKind::Triple => {
                    let (p, inv) = random_basis(rng);
                    let n = if n_rank2 {
                        Mat3::new(0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0)
                    } else {
                        Mat3::new(0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
                    };
                    let a = p * (Mat3::identity() * l0 + n) * inv;
                    (a, polynomial(rng, &a))
                }
                PairKind::DoublePlane => {
                    let (p, inv) = random_basis(rng);
                    let a = p
                        * Mat3::new(l0, 0.0, 0.0, 0.0, l0, 0.0, 0.0, 0.0, l0 + 1.0 + l1.abs())
                        * inv;
                    let mut block = random_matrix(rng, -2.0, 2.0);
                    block[(0, 2)] = 0.0;
                    block[(1, 2)] = 0.0;
                    block[(2, 0)] = 0.0;
                    block[(2, 1)] = 0.0;
                    (a, p * block * inv)
                }
                PairKind::Scalar => (Mat3::identity() * l2, random_matrix(rng, -2.0, 2.0)),
            };
            CommutingPair { kind, a, b }
        })
        .collect()
}
