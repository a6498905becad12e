//! Concrete presentations of the algebra tower.

use super::rewrite::AlgElem;
use super::word::{GenSym, Word};
use crate::scalar::{Alphabet, GaussianRational, RationalFn};
use num_bigint::BigUint;
use std::sync::Arc;

/// Involution behaviour of a generator family.
#[derive(Clone, Debug)]
pub enum StarKind {
    /// `x* = x` (coefficients are still conjugated).
    SelfAdjoint,
    /// `g* = g^{-1} = g - Q·1 + Q·e` with `Q = q - 1/q`; family 0 must be
    /// the `e` family.  Used by the unit-modulus braid mode.
    BraidInverse { q_minus_qinv: RationalFn },
}

/// One generator family of a presentation.
#[derive(Clone, Debug)]
pub struct GenFamily {
    pub name: String,
    /// Weight picked up when a single generator of this family at the top
    /// index is closed by the partial trace.
    pub closure: RationalFn,
    pub star: StarKind,
}

/// A finite presentation of one level of an algebra tower.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Number of strands; generators carry indices `1..n`.
    pub n: usize,
    pub alph: Arc<Alphabet>,
    pub families: Vec<GenFamily>,
    /// Vanishing linear combinations of words.
    pub relations: Vec<AlgElem>,
    /// Weight of a closed strand carrying no top-index generator (`δ`; for
    /// the Fuss–Catalan algebra a block closure gives `γ²`).
    pub loop_factor: RationalFn,
    /// Short machine label used for cache files and reports.
    pub label: String,
    /// Closed-form dimension when known; `None` for the ambient
    /// two-generator algebra with `n >= 3`, which is infinite-dimensional.
    pub expected_dim: Option<BigUint>,
}

impl Presentation {
    pub fn gen(&self, fam: u8, idx: usize) -> GenSym {
        assert!(idx >= 1 && idx < self.n, "generator index out of range");
        GenSym::new(fam, idx as u8)
    }

    /// Convenience: the word for a sequence of `(family, index)` letters.
    pub fn word(&self, letters: &[(u8, usize)]) -> Word {
        Word(letters.iter().map(|&(f, i)| self.gen(f, i)).collect())
    }

    pub fn elem(&self, terms: &[(&[(u8, usize)], RationalFn)]) -> AlgElem {
        let mut e = AlgElem::zero();
        for (ls, c) in terms {
            e.add_term(self.word(ls), c.clone());
        }
        e
    }
}

fn catalan(n: usize) -> BigUint {
    binom(2 * n, n) / BigUint::from(n + 1)
}

fn fuss_catalan_number(n: usize) -> BigUint {
    binom(3 * n, n) / BigUint::from(2 * n + 1)
}

fn double_factorial_odd(n: usize) -> BigUint {
    // (2n - 1)!!
    let mut r = BigUint::from(1u32);
    let mut k = 1usize;
    while k <= 2 * n - 1 {
        r *= BigUint::from(k);
        k += 2;
    }
    r
}

fn binom(n: usize, k: usize) -> BigUint {
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// Family indices shared by all presentations below: `e`-type diagrams are
/// family 0 and the "second generator" (s, g or P) is family 1, matching
/// the precedence of the word order.
pub const FAM_E: u8 = 0;
pub const FAM_S: u8 = 1;

impl Presentation {
    /// Temperley–Lieb `TL_n(δ)`.
    pub fn temperley_lieb(n: usize, delta: &RationalFn) -> Self {
        let alph = delta.alphabet().clone();
        let one = RationalFn::one(&alph);
        let mut p = Presentation {
            n,
            alph: alph.clone(),
            families: vec![GenFamily {
                name: "e".into(),
                closure: one.clone(),
                star: StarKind::SelfAdjoint,
            }],
            relations: Vec::new(),
            loop_factor: delta.clone(),
            label: "tl".into(),
            expected_dim: Some(catalan(n)),
        };
        let e = FAM_E;
        for i in 1..n {
            p.relations.push(p.elem(&[
                (&[(e, i), (e, i)], one.clone()),
                (&[(e, i)], delta.neg()),
            ]));
        }
        for i in 1..n {
            for j in [i + 1, i.wrapping_sub(1)] {
                if j >= 1 && j < n && j != i {
                    p.relations.push(p.elem(&[
                        (&[(e, i), (e, j), (e, i)], one.clone()),
                        (&[(e, i)], one.neg()),
                    ]));
                }
            }
        }
        for i in 1..n {
            for j in i + 2..n {
                p.relations.push(p.elem(&[
                    (&[(e, j), (e, i)], one.clone()),
                    (&[(e, i), (e, j)], one.neg()),
                ]));
            }
        }
        p
    }

    /// Two-colour Fuss–Catalan `FC_n(γ)` with generators `E` (family 0)
    /// and `P` (family 1); the underlying loop weight is `δ = γ²`.
    pub fn fuss_catalan(n: usize, gamma: &RationalFn) -> Self {
        let alph = gamma.alphabet().clone();
        let one = RationalFn::one(&alph);
        let g2 = gamma.mul(gamma);
        let mut p = Presentation {
            n,
            alph: alph.clone(),
            families: vec![
                GenFamily { name: "E".into(), closure: one.clone(), star: StarKind::SelfAdjoint },
                GenFamily { name: "P".into(), closure: gamma.clone(), star: StarKind::SelfAdjoint },
            ],
            relations: Vec::new(),
            loop_factor: g2.clone(),
            label: "fc".into(),
            expected_dim: Some(fuss_catalan_number(n)),
        };
        let (be, bp) = (FAM_E, FAM_S);
        for i in 1..n {
            // E_i^2 = γ² E_i ; P_i^2 = γ P_i ; P_i E_i = E_i P_i = γ E_i.
            p.relations.push(p.elem(&[(&[(be, i), (be, i)], one.clone()), (&[(be, i)], g2.neg())]));
            p.relations.push(p.elem(&[(&[(bp, i), (bp, i)], one.clone()), (&[(bp, i)], gamma.neg())]));
            p.relations.push(p.elem(&[(&[(bp, i), (be, i)], one.clone()), (&[(be, i)], gamma.neg())]));
            p.relations.push(p.elem(&[(&[(be, i), (bp, i)], one.clone()), (&[(be, i)], gamma.neg())]));
        }
        for i in 1..n {
            for j in [i + 1, i.wrapping_sub(1)] {
                if !(1..n).contains(&j) || j == i {
                    continue;
                }
                // E_i E_j E_i = E_i ; E_i P_j E_i = γ E_i ;
                // P_i E_j P_i = P_i P_j ; and P_i, P_j commute.
                p.relations.push(p.elem(&[
                    (&[(be, i), (be, j), (be, i)], one.clone()),
                    (&[(be, i)], one.neg()),
                ]));
                p.relations.push(p.elem(&[
                    (&[(be, i), (bp, j), (be, i)], one.clone()),
                    (&[(be, i)], gamma.neg()),
                ]));
                p.relations.push(p.elem(&[
                    (&[(bp, i), (be, j), (bp, i)], one.clone()),
                    (&[(bp, i), (bp, j)], one.neg()),
                ]));
                if j > i {
                    p.relations.push(p.elem(&[
                        (&[(bp, j), (bp, i)], one.clone()),
                        (&[(bp, i), (bp, j)], one.neg()),
                    ]));
                }
            }
        }
        for i in 1..n {
            for j in i + 2..n {
                for (fa, fb) in [(be, be), (be, bp), (bp, be), (bp, bp)] {
                    p.relations.push(p.elem(&[
                        (&[(fb, j), (fa, i)], one.clone()),
                        (&[(fa, i), (fb, j)], one.neg()),
                    ]));
                }
            }
        }
        p
    }

    /// The ambient two-generator algebra `PS_n(α, δ)` at a concrete fourth
    /// root of unity `ε`.  Infinite-dimensional for `n >= 3`.
    pub fn proto(n: usize, delta: &RationalFn, alpha: &RationalFn, eps: &GaussianRational) -> Self {
        let alph = delta.alphabet().clone();
        let one = RationalFn::one(&alph);
        let eps_f = RationalFn::constant(&alph, eps.clone());
        let eps_inv = RationalFn::constant(&alph, eps.inv());
        let inv_d = one.div(delta).expect("delta is nonzero");
        let expected_dim = match n {
            1 => Some(BigUint::from(1u32)),
            2 => Some(BigUint::from(3u32)),
            _ => None,
        };
        let mut p = Presentation {
            n,
            alph: alph.clone(),
            families: vec![
                GenFamily { name: "e".into(), closure: one.clone(), star: StarKind::SelfAdjoint },
                GenFamily { name: "s".into(), closure: RationalFn::zero(&alph), star: StarKind::SelfAdjoint },
            ],
            relations: Vec::new(),
            loop_factor: delta.clone(),
            label: "ps".into(),
            expected_dim,
        };
        let (e, s) = (FAM_E, FAM_S);
        for i in 1..n {
            // s_i² = 1 - e_i/δ + α s_i ; e_i s_i = s_i e_i = 0 ; e_i² = δ e_i.
            p.relations.push(p.elem(&[
                (&[(s, i), (s, i)], one.clone()),
                (&[], one.neg()),
                (&[(e, i)], inv_d.clone()),
                (&[(s, i)], alpha.neg()),
            ]));
            p.relations.push(p.elem(&[(&[(e, i), (s, i)], one.clone())]));
            p.relations.push(p.elem(&[(&[(s, i), (e, i)], one.clone())]));
            p.relations.push(p.elem(&[(&[(e, i), (e, i)], one.clone()), (&[(e, i)], delta.neg())]));
        }
        for i in 1..n {
            for j in [i + 1, i.wrapping_sub(1)] {
                if !(1..n).contains(&j) || j == i {
                    continue;
                }
                // ε^{+1} goes with the upper neighbour, ε^{-1} with the lower.
                let (ep, em) = if j == i + 1 {
                    (eps_f.clone(), eps_inv.clone())
                } else {
                    (eps_inv.clone(), eps_f.clone())
                };
                // e_i e_j e_i = e_i.
                p.relations.push(p.elem(&[
                    (&[(e, i), (e, j), (e, i)], one.clone()),
                    (&[(e, i)], one.neg()),
                ]));
                // e_i e_j s_i = ε^{±1} e_i s_j.
                p.relations.push(p.elem(&[
                    (&[(e, i), (e, j), (s, i)], one.clone()),
                    (&[(e, i), (s, j)], ep.neg()),
                ]));
                // s_i e_j e_i = ε^{∓1} s_j e_i.
                p.relations.push(p.elem(&[
                    (&[(s, i), (e, j), (e, i)], one.clone()),
                    (&[(s, j), (e, i)], em.neg()),
                ]));
                // Derived seeds (all proved from the defining set):
                // e_i s_j e_i = 0.
                p.relations.push(p.elem(&[(&[(e, i), (s, j), (e, i)], one.clone())]));
                // e_i s_j s_i = ε^{∓1}(e_i e_j - e_i/δ) + α e_i s_j.
                p.relations.push(p.elem(&[
                    (&[(e, i), (s, j), (s, i)], one.clone()),
                    (&[(e, i), (e, j)], em.neg()),
                    (&[(e, i)], em.mul(&inv_d)),
                    (&[(e, i), (s, j)], alpha.neg()),
                ]));
                // s_i s_j e_i = ε^{±1}(e_j e_i - e_i/δ) + α s_j e_i.
                p.relations.push(p.elem(&[
                    (&[(s, i), (s, j), (e, i)], one.clone()),
                    (&[(e, j), (e, i)], ep.neg()),
                    (&[(e, i)], ep.mul(&inv_d)),
                    (&[(s, j), (e, i)], alpha.neg()),
                ]));
                // s_i e_j s_i = s_j e_i s_j (for the upper neighbour only,
                // to avoid duplicating the symmetric relation).
                if j == i + 1 {
                    p.relations.push(p.elem(&[
                        (&[(s, j), (e, i), (s, j)], one.clone()),
                        (&[(s, i), (e, j), (s, i)], one.neg()),
                    ]));
                }
            }
        }
        for i in 1..n {
            for j in i + 2..n {
                for (fa, fb) in [(e, e), (e, s), (s, e), (s, s)] {
                    p.relations.push(p.elem(&[
                        (&[(fb, j), (fa, i)], one.clone()),
                        (&[(fa, i), (fb, j)], one.neg()),
                    ]));
                }
            }
        }
        p
    }

    /// Liu's algebra `L_n^{(ε)}(δ)`: the ambient algebra at `α = 0`,
    /// `ε = ±i`, plus the cubic relation making it finite-dimensional.
    pub fn liu(n: usize, delta: &RationalFn, eps: &GaussianRational) -> Self {
        assert!(
            eps.is_real() == false && eps.norm_sq() == num_rational::BigRational::from_integer(1.into()),
            "Liu's algebra needs ε = ±i"
        );
        let alph = delta.alphabet().clone();
        let one = RationalFn::one(&alph);
        let zero = RationalFn::zero(&alph);
        let mut p = Self::proto(n, delta, &zero, eps);
        p.label = "liu".into();
        p.expected_dim = Some(double_factorial_odd(n));
        let inv_d2 = one.div(&delta.mul(delta)).expect("delta is nonzero");
        let eps_f = RationalFn::constant(&alph, eps.clone());
        let (e, s) = (FAM_E, FAM_S);
        for i in 1..n.saturating_sub(1) {
            let j = i + 1;
            // s_i s_j s_i - s_j s_i s_j
            //   = (s_i - s_j - ε(e_i s_j - s_j e_i + e_j s_i - s_i e_j))/δ².
            p.relations.push(p.elem(&[
                (&[(s, i), (s, j), (s, i)], one.clone()),
                (&[(s, j), (s, i), (s, j)], one.neg()),
                (&[(s, i)], inv_d2.neg()),
                (&[(s, j)], inv_d2.clone()),
                (&[(e, i), (s, j)], eps_f.mul(&inv_d2)),
                (&[(s, j), (e, i)], eps_f.mul(&inv_d2).neg()),
                (&[(e, j), (s, i)], eps_f.mul(&inv_d2)),
                (&[(s, i), (e, j)], eps_f.mul(&inv_d2).neg()),
            ]));
        }
        p
    }

    /// The BMW algebra `W_n(τ, q)` with the inverse braid generator
    /// eliminated through `g^{-1} = g - Q·1 + Q·e`, `Q = q - 1/q`.
    /// `real_star` selects the involution mode: `g* = g` for real `(τ, q)`,
    /// `g* = g^{-1}` for the unit-modulus mode.
    pub fn bmw(n: usize, tau: &RationalFn, q: &RationalFn, real_star: bool) -> Self {
        let alph = tau.alphabet().clone();
        let one = RationalFn::one(&alph);
        let q_inv = q.inv().expect("q is invertible");
        let tau_inv = tau.inv().expect("tau is invertible");
        let big_q = q.sub(&q_inv);
        // δ = 1 + (τ - 1/τ)/Q.
        let delta = one.add(&tau.sub(&tau_inv).div(&big_q).expect("Q nonzero"));
        let star = if real_star {
            StarKind::SelfAdjoint
        } else {
            StarKind::BraidInverse { q_minus_qinv: big_q.clone() }
        };
        let mut p = Presentation {
            n,
            alph: alph.clone(),
            families: vec![
                GenFamily { name: "e".into(), closure: one.clone(), star: StarKind::SelfAdjoint },
                GenFamily { name: "g".into(), closure: tau_inv.clone(), star },
            ],
            relations: Vec::new(),
            loop_factor: delta.clone(),
            label: "bmw".into(),
            expected_dim: Some(double_factorial_odd(n)),
        };
        let (e, g) = (FAM_E, FAM_S);
        for i in 1..n {
            // e_i² = δ e_i ; g_i e_i = e_i g_i = τ⁻¹ e_i ;
            // g_i² = 1 + Q g_i - Q τ⁻¹ e_i.
            p.relations.push(p.elem(&[(&[(e, i), (e, i)], one.clone()), (&[(e, i)], delta.neg())]));
            p.relations.push(p.elem(&[(&[(g, i), (e, i)], one.clone()), (&[(e, i)], tau_inv.neg())]));
            p.relations.push(p.elem(&[(&[(e, i), (g, i)], one.clone()), (&[(e, i)], tau_inv.neg())]));
            p.relations.push(p.elem(&[
                (&[(g, i), (g, i)], one.clone()),
                (&[], one.neg()),
                (&[(g, i)], big_q.neg()),
                (&[(e, i)], big_q.mul(&tau_inv)),
            ]));
        }
        for i in 1..n {
            for j in [i + 1, i.wrapping_sub(1)] {
                if !(1..n).contains(&j) || j == i {
                    continue;
                }
                if j == i + 1 {
                    // Braid relation (one orientation suffices).
                    p.relations.push(p.elem(&[
                        (&[(g, i), (g, j), (g, i)], one.clone()),
                        (&[(g, j), (g, i), (g, j)], one.neg()),
                    ]));
                }
                // e_i g_j g_i = e_i e_j ; g_j g_i e_j = e_i e_j ... both
                // neighbour orientations of the slide relations.
                p.relations.push(p.elem(&[
                    (&[(e, i), (g, j), (g, i)], one.clone()),
                    (&[(e, i), (e, j)], one.neg()),
                ]));
                p.relations.push(p.elem(&[
                    (&[(g, i), (g, j), (e, i)], one.clone()),
                    (&[(e, j), (e, i)], one.neg()),
                ]));
                // e_i e_j e_i = e_i ; e_i g_j e_i = τ e_i.
                p.relations.push(p.elem(&[
                    (&[(e, i), (e, j), (e, i)], one.clone()),
                    (&[(e, i)], one.neg()),
                ]));
                p.relations.push(p.elem(&[
                    (&[(e, i), (g, j), (e, i)], one.clone()),
                    (&[(e, i)], tau.neg()),
                ]));
                // g_i e_j e_i = g_j^{-1} e_i = (g_j - Q + Q e_j) e_i, and
                // its mirror e_i e_j g_i = e_i g_j^{-1}.
                p.relations.push(p.elem(&[
                    (&[(g, i), (e, j), (e, i)], one.clone()),
                    (&[(g, j), (e, i)], one.neg()),
                    (&[(e, i)], big_q.clone()),
                    (&[(e, j), (e, i)], big_q.neg()),
                ]));
                p.relations.push(p.elem(&[
                    (&[(e, i), (e, j), (g, i)], one.clone()),
                    (&[(e, i), (g, j)], one.neg()),
                    (&[(e, i)], big_q.clone()),
                    (&[(e, i), (e, j)], big_q.neg()),
                ]));
                // g_i e_j g_i = g_j^{-1} e_i g_j^{-1}, fully expanded.
                let mut rel = AlgElem::zero();
                rel.add_term(p.word(&[(g, i), (e, j), (g, i)]), one.clone());
                // (g_j - Q + Q e_j) e_i (g_j - Q + Q e_j) =
                //   g_j e_i g_j - Q g_j e_i + Q g_j e_i e_j
                // - Q e_i g_j + Q² e_i - Q² e_i e_j
                // + Q e_j e_i g_j - Q² e_j e_i + Q² e_j e_i e_j.
                let q2 = big_q.mul(&big_q);
                rel.add_term(p.word(&[(g, j), (e, i), (g, j)]), one.neg());
                rel.add_term(p.word(&[(g, j), (e, i)]), big_q.clone());
                rel.add_term(p.word(&[(g, j), (e, i), (e, j)]), big_q.neg());
                rel.add_term(p.word(&[(e, i), (g, j)]), big_q.clone());
                rel.add_term(p.word(&[(e, i)]), q2.neg());
                rel.add_term(p.word(&[(e, i), (e, j)]), q2.clone());
                rel.add_term(p.word(&[(e, j), (e, i), (g, j)]), big_q.neg());
                rel.add_term(p.word(&[(e, j), (e, i)]), q2.clone());
                rel.add_term(p.word(&[(e, j), (e, i), (e, j)]), q2.neg());
                p.relations.push(rel);
            }
        }
        for i in 1..n {
            for j in i + 2..n {
                for (fa, fb) in [(e, e), (e, g), (g, e), (g, g)] {
                    p.relations.push(p.elem(&[
                        (&[(fb, j), (fa, i)], one.clone()),
                        (&[(fa, i), (fb, j)], one.neg()),
                    ]));
                }
            }
        }
        p
    }
}
