//! Free 1-cell paths and symbolic 2-cell expressions.
//!
//! 1-cells are represented as composites of declared generators: a path lists
//! its generators first-applied-first, and the empty path at an object is that
//! object's identity 1-cell. Horizontal composition of paths is concatenation,
//! which makes associativity and unitality of 1-cell composition structural.

use std::fmt;

/// Name of an object (0-cell).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ObjId(pub String);

/// Name of a generating 1-cell.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen1Id(pub String);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Gen1Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A composable sequence of generating 1-cells, listed first-applied-first.
///
/// The empty sequence is the identity 1-cell on `src` (`src == tgt` then).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OneCellPath {
    pub src: ObjId,
    pub tgt: ObjId,
    pub gens: Vec<Gen1Id>,
}

impl OneCellPath {
    pub fn identity(a: &ObjId) -> Self {
        OneCellPath {
            src: a.clone(),
            tgt: a.clone(),
            gens: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Canonical key used in tables, reports and perturbation addresses.
    pub fn key(&self) -> String {
        if self.gens.is_empty() {
            format!("id@{}", self.src)
        } else {
            self.gens
                .iter()
                .map(|g| g.0.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

impl fmt::Display for OneCellPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// A 2-cell generator: either an ambient cell declared by the instance or a
/// component of the monoidal structure.
///
/// Structure cells are addressed by their indexing data, so the same value
/// tables serve every condition that mentions the component.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Cell {
    /// A 2-cell declared by the instance, addressed by name.
    Ambient(String),
    /// Tensorator component at a composable pair of 1-cell pairs:
    /// `(f1 tensor g1) after (f0 tensor g0)  =>  (f1 after f0) tensor (g1 after g0)`.
    Phi {
        f1: OneCellPath,
        g1: OneCellPath,
        f0: OneCellPath,
        g0: OneCellPath,
    },
    /// Tensorator component at a pair of identity 1-cells; forced to be the
    /// identity 2-cell at load time.
    PhiUnit { a: ObjId, b: ObjId },
    /// Associator 2-cell component with the moving 1-cell in the first slot.
    Alpha1 { f: OneCellPath, b: ObjId, c: ObjId },
    /// Associator 2-cell component with the moving 1-cell in the second slot.
    Alpha2 { a: ObjId, g: OneCellPath, c: ObjId },
    /// Associator 2-cell component with the moving 1-cell in the third slot.
    Alpha3 { a: ObjId, b: ObjId, h: OneCellPath },
    /// Left unitor 2-cell component at a 1-cell.
    LUnit { f: OneCellPath },
    /// Right unitor 2-cell component at a 1-cell.
    RUnit { f: OneCellPath },
    /// Pentagonator component at four objects.
    Pi { a: ObjId, b: ObjId, c: ObjId, d: ObjId },
    /// 2-unitor with the unit in the left factor of the left pair.
    Lambda { a: ObjId, b: ObjId },
    /// 2-unitor with the unit in the middle.
    Mu { a: ObjId, b: ObjId },
    /// 2-unitor with the unit in the right factor of the right pair.
    Rho { a: ObjId, b: ObjId },
}

impl Cell {
    /// Canonical key used by value tables and perturbation addressing.
    pub fn key(&self) -> String {
        match self {
            Cell::Ambient(name) => format!("cell:{name}"),
            Cell::Phi { f1, g1, f0, g0 } => {
                format!("phi[{}|{}|{}|{}]", f1.key(), g1.key(), f0.key(), g0.key())
            }
            Cell::PhiUnit { a, b } => format!("phi_unit[{a}|{b}]"),
            Cell::Alpha1 { f, b, c } => format!("alpha1[{}|{b}|{c}]", f.key()),
            Cell::Alpha2 { a, g, c } => format!("alpha2[{a}|{}|{c}]", g.key()),
            Cell::Alpha3 { a, b, h } => format!("alpha3[{a}|{b}|{}]", h.key()),
            Cell::LUnit { f } => format!("l[{}]", f.key()),
            Cell::RUnit { f } => format!("r[{}]", f.key()),
            Cell::Pi { a, b, c, d } => format!("pi[{a}|{b}|{c}|{d}]"),
            Cell::Lambda { a, b } => format!("lambda[{a}|{b}]"),
            Cell::Mu { a, b } => format!("mu[{a}|{b}]"),
            Cell::Rho { a, b } => format!("rho[{a}|{b}]"),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// A symbolic 2-cell built from generators by the five expression formers.
///
/// `VComp(a, b)` applies `a` first and `b` second; `HComp(a, b)` places `a`
/// on the side that is applied first along the 1-cell direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TwoCellExpr {
    Gen(Cell),
    Identity(OneCellPath),
    VComp(Box<TwoCellExpr>, Box<TwoCellExpr>),
    HComp(Box<TwoCellExpr>, Box<TwoCellExpr>),
    Tensor(Box<TwoCellExpr>, Box<TwoCellExpr>),
    Inverse(Box<TwoCellExpr>),
}

impl TwoCellExpr {
    pub fn gen(c: Cell) -> Self {
        TwoCellExpr::Gen(c)
    }

    pub fn identity(p: OneCellPath) -> Self {
        TwoCellExpr::Identity(p)
    }

    pub fn vcomp(first: TwoCellExpr, second: TwoCellExpr) -> Self {
        TwoCellExpr::VComp(Box::new(first), Box::new(second))
    }

    pub fn hcomp(first: TwoCellExpr, second: TwoCellExpr) -> Self {
        TwoCellExpr::HComp(Box::new(first), Box::new(second))
    }

    pub fn tensor(left: TwoCellExpr, right: TwoCellExpr) -> Self {
        TwoCellExpr::Tensor(Box::new(left), Box::new(right))
    }

    pub fn inverse(e: TwoCellExpr) -> Self {
        TwoCellExpr::Inverse(Box::new(e))
    }

    /// Whether the expression mentions `cell` as a generator anywhere.
    pub fn mentions(&self, cell: &Cell) -> bool {
        match self {
            TwoCellExpr::Gen(c) => c == cell,
            TwoCellExpr::Identity(_) => false,
            TwoCellExpr::VComp(a, b)
            | TwoCellExpr::HComp(a, b)
            | TwoCellExpr::Tensor(a, b) => a.mentions(cell) || b.mentions(cell),
            TwoCellExpr::Inverse(a) => a.mentions(cell),
        }
    }

    /// All generator cells mentioned, in left-to-right traversal order.
    pub fn cells(&self) -> Vec<&Cell> {
        let mut out = Vec::new();
        self.collect_cells(&mut out);
        out
    }

    fn collect_cells<'a>(&'a self, out: &mut Vec<&'a Cell>) {
        match self {
            TwoCellExpr::Gen(c) => out.push(c),
            TwoCellExpr::Identity(_) => {}
            TwoCellExpr::VComp(a, b)
            | TwoCellExpr::HComp(a, b)
            | TwoCellExpr::Tensor(a, b) => {
                a.collect_cells(out);
                b.collect_cells(out);
            }
            TwoCellExpr::Inverse(a) => a.collect_cells(out),
        }
    }
}
