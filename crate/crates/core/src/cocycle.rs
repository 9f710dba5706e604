//! Independent group-cohomology oracle.
//!
//! This module works directly with finite abelian groups presented as cyclic
//! products and with dense cochain tables. It shares no code with the
//! symbolic evaluator, so agreement between the two is a real check.

use crate::error::{Error, Result};

/// A finite abelian group `Z/m1 x ... x Z/mk` with elements indexed densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicProduct {
    pub moduli: Vec<u32>,
}

impl CyclicProduct {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() || moduli.iter().any(|m| *m == 0) {
            return Err(Error::validation("group", "moduli must be positive"));
        }
        Ok(CyclicProduct { moduli })
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|m| *m as usize).product()
    }

    /// Index of the product of elements `i` and `j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let mut out = 0;
        let mut stride = 1;
        let (mut ri, mut rj) = (i, j);
        for m in &self.moduli {
            let m = *m as usize;
            let s = ((ri % m) + (rj % m)) % m;
            out += s * stride;
            stride *= m;
            ri /= m;
            rj /= m;
        }
        out
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Residue vector of element `i`.
    pub fn residues(&self, mut i: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.moduli.len());
        for m in &self.moduli {
            out.push((i % *m as usize) as u32);
            i /= *m as usize;
        }
        out
    }

    /// Index of the element with the given residues.
    pub fn index(&self, residues: &[u32]) -> Result<usize> {
        if residues.len() != self.moduli.len() {
            return Err(Error::Parse(format!(
                "element has {} components, group has {}",
                residues.len(),
                self.moduli.len()
            )));
        }
        let mut out = 0;
        let mut stride = 1;
        for (r, m) in residues.iter().zip(&self.moduli) {
            if *r >= *m {
                return Err(Error::Parse(format!(
                    "residue {r} out of range for modulus {m}"
                )));
            }
            out += *r as usize * stride;
            stride *= *m as usize;
        }
        Ok(out)
    }
}

/// A `k`-cochain on `g` with values in `k_grp`, stored densely: the entry at
/// `(a, b, c, d)` lives at index `((a * n + b) * n + c) * n + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain4 {
    pub values: Vec<u32>,
}

impl Cochain4 {
    pub fn zero(g: &CyclicProduct) -> Self {
        Cochain4 {
            values: vec![0; g.order().pow(4)],
        }
    }

    pub fn at(&self, g: &CyclicProduct, a: usize, b: usize, c: usize, d: usize) -> u32 {
        let n = g.order();
        self.values[((a * n + b) * n + c) * n + d]
    }

    pub fn set(
        &mut self,
        g: &CyclicProduct,
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        v: u32,
    ) {
        let n = g.order();
        self.values[((a * n + b) * n + c) * n + d] = v;
    }
}

/// A 3-cochain, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3 {
    pub values: Vec<u32>,
}

impl Cochain3 {
    pub fn zero(g: &CyclicProduct) -> Self {
        Cochain3 {
            values: vec![0; g.order().pow(3)],
        }
    }

    pub fn at(&self, g: &CyclicProduct, a: usize, b: usize, c: usize) -> u32 {
        let n = g.order();
        self.values[(a * n + b) * n + c]
    }
}

fn k_add(k: &CyclicProduct, a: u32, b: u32) -> u32 {
    // Coefficient values are themselves dense indices into `k`.
    k.mul(a as usize, b as usize) as u32
}

fn k_neg(k: &CyclicProduct, a: u32) -> u32 {
    let mut out = 0;
    let mut stride = 1;
    let mut r = a as usize;
    for m in &k.moduli {
        let m = *m as usize;
        let s = (m - (r % m)) % m;
        out += s * stride;
        stride *= m;
        r /= m;
    }
    out as u32
}

/// The coboundary of a 4-cochain at a 5-tuple: the six-term alternating sum.
pub fn coboundary4_at(
    g: &CyclicProduct,
    k: &CyclicProduct,
    omega: &Cochain4,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
) -> u32 {
    let mut acc = omega.at(g, b, c, d, e);
    acc = k_add(k, acc, k_neg(k, omega.at(g, g.mul(a, b), c, d, e)));
    acc = k_add(k, acc, omega.at(g, a, g.mul(b, c), d, e));
    acc = k_add(k, acc, k_neg(k, omega.at(g, a, b, g.mul(c, d), e)));
    acc = k_add(k, acc, omega.at(g, a, b, c, g.mul(d, e)));
    acc = k_add(k, acc, k_neg(k, omega.at(g, a, b, c, d)));
    acc
}

/// All 5-tuples where the coboundary of `omega` is non-zero.
pub fn coboundary4_support(
    g: &CyclicProduct,
    k: &CyclicProduct,
    omega: &Cochain4,
) -> Vec<[usize; 5]> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        if coboundary4_at(g, k, omega, a, b, c, d, e) != 0 {
                            out.push([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Whether `omega` is a 4-cocycle.
pub fn is_cocycle(g: &CyclicProduct, k: &CyclicProduct, omega: &Cochain4) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        if coboundary4_at(g, k, omega, a, b, c, d, e) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// The coboundary of a 3-cochain, as a 4-cochain.
pub fn coboundary3(g: &CyclicProduct, k: &CyclicProduct, nu: &Cochain3) -> Cochain4 {
    let n = g.order();
    let mut out = Cochain4::zero(g);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut acc = nu.at(g, b, c, d);
                    acc = k_add(k, acc, k_neg(k, nu.at(g, g.mul(a, b), c, d)));
                    acc = k_add(k, acc, nu.at(g, a, g.mul(b, c), d));
                    acc = k_add(k, acc, k_neg(k, nu.at(g, a, b, g.mul(c, d))));
                    acc = k_add(k, acc, nu.at(g, a, b, c));
                    out.set(g, a, b, c, d, acc);
                }
            }
        }
    }
    out
}

/// Enumerate every 4-cochain, pairing each with its cocycle status.
///
/// Guarded: the search space `|K| ^ (|G|^4)` must not exceed `2^20`.
pub fn enumerate_cochains(
    g: &CyclicProduct,
    k: &CyclicProduct,
) -> Result<Vec<(Cochain4, bool)>> {
    let slots = g.order().pow(4);
    let kn = k.order();
    let bound: f64 = (kn as f64).powf(slots as f64);
    if bound > (1u64 << 20) as f64 {
        return Err(Error::DomainTooLarge(format!(
            "{kn}^{slots} cochains exceeds the enumeration bound"
        )));
    }
    let total = (kn as u64).pow(slots as u32) as usize;
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut values = Vec::with_capacity(slots);
        let mut c = code;
        for _ in 0..slots {
            values.push((c % kn) as u32);
            c /= kn;
        }
        let omega = Cochain4 { values };
        let ok = is_cocycle(g, k, &omega);
        out.push((omega, ok));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> CyclicProduct {
        CyclicProduct::new(vec![2]).unwrap()
    }

    #[test]
    fn coboundary_of_coboundary_vanishes() {
        let g = z2();
        let k = z2();
        // All 2^8 3-cochains on Z/2: delta(delta(nu)) = 0 for each.
        for code in 0..(1u32 << 8) {
            let values = (0..8).map(|i| (code >> i) & 1).collect();
            let nu = Cochain3 { values };
            let d_nu = coboundary3(&g, &k, &nu);
            assert!(is_cocycle(&g, &k, &d_nu), "delta delta nu != 0");
        }
    }

    #[test]
    fn product_cochain_is_a_cocycle_mod_2() {
        let g = z2();
        let k = z2();
        let mut omega = Cochain4::zero(&g);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        omega.set(&g, a, b, c, d, ((a * b * c * d) % 2) as u32);
                    }
                }
            }
        }
        assert!(is_cocycle(&g, &k, &omega));
    }

    #[test]
    fn single_flip_breaks_the_product_cocycle() {
        let g = z2();
        let k = z2();
        let mut omega = Cochain4::zero(&g);
        omega.set(&g, 1, 1, 1, 1, 1);
        // omega = indicator of (1,1,1,1); flipping any further entry of the
        // product cocycle leaves delta non-zero somewhere.
        for slot in 0..16 {
            let mut flipped = omega.clone();
            flipped.values[slot] ^= 1;
            assert!(
                !coboundary4_support(&g, &k, &flipped).is_empty(),
                "flip at {slot} unexpectedly stayed a cocycle"
            );
        }
    }

    #[test]
    fn enumeration_respects_the_bound() {
        let g = CyclicProduct::new(vec![2, 2]).unwrap();
        let k = z2();
        assert!(matches!(
            enumerate_cochains(&g, &k),
            Err(Error::DomainTooLarge(_))
        ));
    }

    #[test]
    fn z2_enumeration_counts_cocycles() {
        let g = z2();
        let k = z2();
        let all = enumerate_cochains(&g, &k).unwrap();
        assert_eq!(all.len(), 1 << 16);
        let cocycles: Vec<_> = all.iter().filter(|(_, ok)| *ok).collect();
        // The cocycle set is a subgroup containing every coboundary.
        assert!(!cocycles.is_empty());
        assert!(cocycles.len() % 2 == 0 || cocycles.len() == 1);
        for code in 0..(1u32 << 8) {
            let values = (0..8).map(|i| (code >> i) & 1).collect();
            let nu = Cochain3 { values };
            let d_nu = coboundary3(&g, &k, &nu);
            assert!(is_cocycle(&g, &k, &d_nu));
        }
    }
}
