//! Value alphabets for 2-cells.
//!
//! Every instance evaluates 2-cell expressions into a single alphabet shared
//! by vertical composition, horizontal composition and tensor. The shared
//! identity plus the interchange laws (validated at load time for tabulated
//! alphabets) make this an Eckmann-Hilton situation, so coherent models are
//! always abelian on their invertible part; cyclic-product alphabets bake
//! that in directly.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A value of the 2-cell alphabet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Elem {
    /// Residue vector for a product of cyclic groups.
    Z(Vec<u32>),
    /// Index into a tabulated alphabet.
    T(u16),
}

/// The operations a model provides on its 2-cell values.
#[derive(Clone, Debug)]
pub enum ValueGroup {
    /// Product of cyclic groups `Z/m1 x ... x Z/mk`; all three compositions
    /// are componentwise addition and every value is invertible.
    Cyclic { moduli: Vec<u32> },
    /// Explicit finite tables for the three compositions over named values.
    /// The tables are validated to share an identity and satisfy the
    /// associativity, unit and interchange laws; values need not all be
    /// invertible.
    Table {
        names: Vec<String>,
        vtab: Vec<u16>,
        htab: Vec<u16>,
        ttab: Vec<u16>,
        identity: u16,
        inverses: Vec<Option<u16>>,
    },
}

fn cyclic_op(moduli: &[u32], a: &[u32], b: &[u32]) -> Elem {
    Elem::Z(
        moduli
            .iter()
            .zip(a.iter().zip(b))
            .map(|(m, (x, y))| if *m == 0 { 0 } else { (x + y) % m })
            .collect(),
    )
}

impl ValueGroup {
    pub fn zero(&self) -> Elem {
        match self {
            ValueGroup::Cyclic { moduli } => Elem::Z(vec![0; moduli.len()]),
            ValueGroup::Table { identity, .. } => Elem::T(*identity),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ValueGroup::Cyclic { moduli } => {
                moduli.iter().map(|m| *m as usize).product()
            }
            ValueGroup::Table { names, .. } => names.len(),
        }
    }

    /// Every value of the alphabet, in canonical order.
    pub fn elems(&self) -> Vec<Elem> {
        match self {
            ValueGroup::Cyclic { moduli } => {
                let mut out = vec![vec![]];
                for m in moduli {
                    let mut next = Vec::new();
                    for prefix in &out {
                        for r in 0..*m {
                            let mut v = prefix.clone();
                            v.push(r);
                            next.push(v);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Elem::Z).collect()
            }
            ValueGroup::Table { names, .. } => {
                (0..names.len() as u16).map(Elem::T).collect()
            }
        }
    }

    fn binop(&self, which: Op, a: &Elem, b: &Elem) -> Result<Elem> {
        match (self, a, b) {
            (ValueGroup::Cyclic { moduli }, Elem::Z(x), Elem::Z(y)) => {
                Ok(cyclic_op(moduli, x, y))
            }
            (ValueGroup::Table { names, vtab, htab, ttab, .. }, Elem::T(x), Elem::T(y)) => {
                let n = names.len();
                let tab = match which {
                    Op::V => vtab,
                    Op::H => htab,
                    Op::T => ttab,
                };
                Ok(Elem::T(tab[*x as usize * n + *y as usize]))
            }
            _ => Err(Error::validation(
                "values",
                "value does not belong to this alphabet",
            )),
        }
    }

    /// Vertical composition, first argument applied first.
    pub fn vcomp(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.binop(Op::V, a, b)
    }

    /// Horizontal composition, first argument along-first.
    pub fn hcomp(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.binop(Op::H, a, b)
    }

    /// Tensor of values.
    pub fn tensor(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.binop(Op::T, a, b)
    }

    pub fn invertible(&self, a: &Elem) -> bool {
        match (self, a) {
            (ValueGroup::Cyclic { .. }, Elem::Z(_)) => true,
            (ValueGroup::Table { inverses, .. }, Elem::T(x)) => {
                inverses[*x as usize].is_some()
            }
            _ => false,
        }
    }

    pub fn inverse(&self, a: &Elem) -> Result<Elem> {
        match (self, a) {
            (ValueGroup::Cyclic { moduli }, Elem::Z(x)) => Ok(Elem::Z(
                moduli
                    .iter()
                    .zip(x)
                    .map(|(m, r)| if *m == 0 || *r == 0 { 0 } else { m - r })
                    .collect(),
            )),
            (ValueGroup::Table { inverses, .. }, Elem::T(x)) => inverses
                [*x as usize]
                .map(Elem::T)
                .ok_or_else(|| Error::NotInvertible(self.display(a))),
            _ => Err(Error::validation(
                "values",
                "value does not belong to this alphabet",
            )),
        }
    }

    pub fn display(&self, a: &Elem) -> String {
        match (self, a) {
            (ValueGroup::Cyclic { .. }, Elem::Z(x)) => x
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("_"),
            (ValueGroup::Table { names, .. }, Elem::T(x)) => {
                names[*x as usize].clone()
            }
            _ => "<foreign>".to_string(),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        match self {
            ValueGroup::Cyclic { moduli } => {
                let parts: Vec<&str> = s.split('_').collect();
                if parts.len() != moduli.len() {
                    return Err(Error::Parse(format!(
                        "value `{s}` has {} components, alphabet has {}",
                        parts.len(),
                        moduli.len()
                    )));
                }
                let mut out = Vec::with_capacity(parts.len());
                for (p, m) in parts.iter().zip(moduli) {
                    let r: u32 = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad residue `{p}`")))?;
                    if *m > 0 && r >= *m {
                        return Err(Error::Parse(format!(
                            "residue `{r}` out of range for modulus {m}"
                        )));
                    }
                    out.push(r);
                }
                Ok(Elem::Z(out))
            }
            ValueGroup::Table { names, .. } => names
                .iter()
                .position(|n| n == s)
                .map(|i| Elem::T(i as u16))
                .ok_or_else(|| Error::Parse(format!("unknown value `{s}`"))),
        }
    }

    /// Build a tabulated alphabet, validating all shared-alphabet laws.
    pub fn table(
        names: Vec<String>,
        vtab: Vec<u16>,
        htab: Vec<u16>,
        ttab: Vec<u16>,
        identity_name: &str,
    ) -> Result<ValueGroup> {
        let n = names.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::validation("two_cells.values", "empty or oversized alphabet"));
        }
        let mut seen = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(Error::validation(
                    "two_cells.values",
                    format!("duplicate value `{name}`"),
                ));
            }
        }
        let identity = *seen.get(identity_name).ok_or_else(|| {
            Error::validation(
                "two_cells.identity",
                format!("identity `{identity_name}` is not a declared value"),
            )
        })? as u16;
        for (label, tab) in [("vcomp", &vtab), ("hcomp", &htab), ("tensor", &ttab)] {
            if tab.len() != n * n {
                return Err(Error::validation(
                    label,
                    format!("table must have {} entries", n * n),
                ));
            }
            if tab.iter().any(|e| *e as usize >= n) {
                return Err(Error::validation(label, "table entry out of range"));
            }
            let at = |a: usize, b: usize| tab[a * n + b] as usize;
            for a in 0..n {
                if at(identity as usize, a) != a || at(a, identity as usize) != a {
                    return Err(Error::validation(
                        label,
                        format!("`{}` is not an identity for {label}", names[identity as usize]),
                    ));
                }
                for b in 0..n {
                    for c in 0..n {
                        if at(at(a, b), c) != at(a, at(b, c)) {
                            return Err(Error::validation(label, "table is not associative"));
                        }
                    }
                }
            }
        }
        let v = |a: u16, b: u16| vtab[a as usize * n + b as usize];
        let h = |a: u16, b: u16| htab[a as usize * n + b as usize];
        let t = |a: u16, b: u16| ttab[a as usize * n + b as usize];
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                for c in 0..n as u16 {
                    for d in 0..n as u16 {
                        if h(v(a, b), v(c, d)) != v(h(a, c), h(b, d)) {
                            return Err(Error::validation(
                                "hcomp",
                                "interchange between vcomp and hcomp fails",
                            ));
                        }
                        if t(v(a, b), v(c, d)) != v(t(a, c), t(b, d)) {
                            return Err(Error::validation(
                                "tensor",
                                "interchange between vcomp and tensor fails",
                            ));
                        }
                    }
                }
            }
        }
        let inverses = (0..n as u16)
            .map(|a| {
                (0..n as u16).find(|b| v(a, *b) == identity && v(*b, a) == identity)
            })
            .collect();
        Ok(ValueGroup::Table {
            names,
            vtab,
            htab,
            ttab,
            identity,
            inverses,
        })
    }
}

#[derive(Clone, Copy)]
enum Op {
    V,
    H,
    T,
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Z(x) => write!(
                f,
                "{}",
                x.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("_")
            ),
            Elem::T(x) => write!(f, "#{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> ValueGroup {
        ValueGroup::Cyclic { moduli: vec![4] }
    }

    #[test]
    fn cyclic_ops_are_addition() {
        let g = z4();
        let a = Elem::Z(vec![3]);
        let b = Elem::Z(vec![2]);
        assert_eq!(g.vcomp(&a, &b).unwrap(), Elem::Z(vec![1]));
        assert_eq!(g.hcomp(&a, &b).unwrap(), Elem::Z(vec![1]));
        assert_eq!(g.tensor(&a, &b).unwrap(), Elem::Z(vec![1]));
        assert_eq!(g.inverse(&a).unwrap(), Elem::Z(vec![1]));
        assert_eq!(g.inverse(&g.zero()).unwrap(), g.zero());
    }

    #[test]
    fn cyclic_product_enumeration() {
        let g = ValueGroup::Cyclic { moduli: vec![2, 3] };
        let all = g.elems();
        assert_eq!(all.len(), 6);
        assert!(all.contains(&Elem::Z(vec![1, 2])));
    }

    #[test]
    fn table_rejects_non_associative() {
        // "op" with 0 as identity but 1*1 depending on order of brackets.
        let names = vec!["e".into(), "x".into(), "y".into()];
        let mut tab = vec![0u16; 9];
        for a in 0..3u16 {
            tab[a as usize] = a;
            tab[a as usize * 3] = a;
        }
        tab[1 * 3 + 1] = 2;
        tab[1 * 3 + 2] = 1;
        tab[2 * 3 + 1] = 0;
        tab[2 * 3 + 2] = 0;
        let err = ValueGroup::table(names, tab.clone(), tab.clone(), tab, "e");
        assert!(err.is_err());
    }

    #[test]
    fn table_accepts_z2_and_finds_inverses() {
        let names = vec!["0".into(), "1".into()];
        let tab = vec![0u16, 1, 1, 0];
        let g = ValueGroup::table(names, tab.clone(), tab.clone(), tab, "0").unwrap();
        let one = g.parse_elem("1").unwrap();
        assert!(g.invertible(&one));
        assert_eq!(g.inverse(&one).unwrap(), one);
    }

    #[test]
    fn monoid_table_reports_non_invertible() {
        // Meet-semilattice on {0 <= 1} with identity 1 under min: 0 has no inverse.
        let names = vec!["bot".into(), "top".into()];
        let tab = vec![0u16, 0, 0, 1];
        let g = ValueGroup::table(names, tab.clone(), tab.clone(), tab, "top").unwrap();
        let bot = g.parse_elem("bot").unwrap();
        assert!(!g.invertible(&bot));
        assert_eq!(g.inverse(&bot), Err(Error::NotInvertible("bot".into())));
    }
}
