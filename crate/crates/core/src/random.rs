//! Reproducible random samples for property checks.
//!
//! Each sample is drawn from its own ChaCha8 stream: the generator is seeded
//! with the 64-bit suite seed and the stream number is the sample index, so
//! sample `i` is identical however samples are distributed across threads.

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num::{BigInt, Zero};

use crate::poly::BinaryForm;
use crate::ratmap::{MoebiusMatrix, RationalMap, RationalMapPoint};
use crate::scalar::Rational;

/// Default coefficient bound: integers uniform in `[−9, 9]`.
pub const COEFFICIENT_BOUND: i64 = 9;

/// A seeded sampler for one sample index.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    /// The stream for sample `index` under `seed`.
    pub fn new(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Sampler { rng }
    }

    /// Uniform integer in `[lo, hi]` (rejection sampling, no modulo bias).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi - lo) as u64 + 1;
        let zone = u64::MAX - (u64::MAX % span);
        loop {
            let x = self.rng.next_u64();
            if x < zone {
                return lo + (x % span) as i64;
            }
        }
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.int_in(0, n as i64 - 1) as usize
    }

    /// Nonzero integer in `[−bound, bound]`.
    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let x = self.int_in(-bound, bound);
            if x != 0 {
                return x;
            }
        }
    }

    /// `n / m` with `n ∈ [−num, num]`, `m ∈ [1, den]`.
    pub fn rational(&mut self, num: i64, den: i64) -> Rational {
        let n = self.int_in(-num, num);
        let m = self.int_in(1, den);
        Rational::new(BigInt::from(n), BigInt::from(m))
    }

    /// Nonzero rational as in [`Sampler::rational`].
    pub fn nonzero_rational(&mut self, num: i64, den: i64) -> Rational {
        loop {
            let q = self.rational(num, den);
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Integer form of degree `d` with coefficients in `[−bound, bound]`.
    pub fn form(&mut self, d: usize, bound: i64) -> BinaryForm<Rational> {
        BinaryForm::new((0..=d).map(|_| Rational::from_integer(self.int_in(-bound, bound).into())).collect())
    }

    /// A random morphism of degree `d`: integer coefficients in `[−9, 9]`,
    /// rejected until the resultant is nonzero.
    pub fn map(&mut self, d: usize) -> RationalMap<Rational> {
        self.map_where(d, |_| true)
    }

    /// As [`Sampler::map`], additionally rejecting maps failing `accept`.
    pub fn map_where(&mut self, d: usize, accept: impl Fn(&RationalMap<Rational>) -> bool) -> RationalMap<Rational> {
        loop {
            let a = self.form(d, COEFFICIENT_BOUND);
            let b = self.form(d, COEFFICIENT_BOUND);
            if let Ok(m) = RationalMap::from_forms(a, b) {
                if accept(&m) {
                    return m;
                }
            }
        }
    }

    /// Invertible integer matrix with entries in `[−bound, bound]`.
    pub fn moebius(&mut self, bound: i64) -> MoebiusMatrix<Rational> {
        loop {
            let e: Vec<i64> = (0..4).map(|_| self.int_in(-bound, bound)).collect();
            if let Ok(m) = MoebiusMatrix::from_i64s(e[0], e[1], e[2], e[3]) {
                return m;
            }
        }
    }

    /// A point of `P^{2d+1}` with vanishing resultant, drawn from several
    /// shapes so that stable, strictly semistable and unstable points all
    /// occur:
    ///
    /// * a common linear factor `L·[G_a, G_b]`;
    /// * a proportional pair `[c·G, c′·G]`;
    /// * a common factor `L^k`;
    /// * prescribed initial zeros `aᵢ = 0 (i < r)`, `bᵢ = 0 (i < s)`, with
    ///   `r, s ≥ 1`, moved by a random conjugation.
    pub fn degenerate_point(&mut self, d: usize) -> RationalMapPoint<Rational> {
        loop {
            let p = match self.index(4) {
                0 => {
                    let l = self.form(1, 3);
                    let (ga, gb) = (self.form(d - 1, 4), self.form(d - 1, 4));
                    RationalMapPoint::new(l.mul(&ga), l.mul(&gb))
                }
                1 => {
                    let g = self.form(d, 4);
                    let (ca, cb) = (self.int_in(-3, 3), self.int_in(-3, 3));
                    RationalMapPoint::new(
                        g.scale(&Rational::from_integer(ca.into())),
                        g.scale(&Rational::from_integer(cb.into())),
                    )
                }
                2 => {
                    let k = self.int_in(1, d as i64) as usize;
                    let l = self.form(1, 3);
                    let mut lk = BinaryForm::from_i64s(&[1]);
                    for _ in 0..k {
                        lk = lk.mul(&l);
                    }
                    let (ga, gb) = (self.form(d - k, 4), self.form(d - k, 4));
                    RationalMapPoint::new(lk.mul(&ga), lk.mul(&gb))
                }
                _ => {
                    let r = self.int_in(1, d as i64) as usize;
                    let s = self.int_in(1, d as i64) as usize;
                    let mut a = self.form(d, 4).coeffs().to_vec();
                    let mut b = self.form(d, 4).coeffs().to_vec();
                    a.iter_mut().take(r).for_each(|c| *c = Rational::zero());
                    b.iter_mut().take(s).for_each(|c| *c = Rational::zero());
                    let f = self.moebius(2);
                    RationalMapPoint::new(BinaryForm::new(a), BinaryForm::new(b)).and_then(|p| p.conjugate(&f))
                }
            };
            if let Ok(p) = p {
                if p.resultant().is_ok_and(|r| r.is_zero()) {
                    return p;
                }
            }
        }
    }
}
