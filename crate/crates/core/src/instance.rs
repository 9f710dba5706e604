//! Concrete finite instances: a signature, a value alphabet, ambient 2-cells
//! and sparse tables for the monoidal structure 2-cells.
//!
//! Structure tables default to the identity value: a component that is not
//! listed evaluates to the alphabet's identity. Whether the resulting family
//! is coherent is exactly what the condition suite decides; no component is
//! ever derived behind the instance's back.

use std::collections::BTreeMap;

use crate::cell::{Cell, Gen1Id, ObjId, OneCellPath, TwoCellExpr};
use crate::error::{Error, Result};
use crate::group::{Elem, ValueGroup};
use crate::sig::Signature;

/// Which flavor of model an instance came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    Tabulated,
    Scalar,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Tabulated => "tabulated",
            ModelKind::Scalar => "scalar",
        }
    }
}

/// An ambient 2-cell declared by the instance.
#[derive(Clone, Debug)]
pub struct AmbientCell {
    pub src: OneCellPath,
    pub tgt: OneCellPath,
    pub value: Elem,
}

/// Sparse value tables for structure 2-cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Structure {
    pub table: BTreeMap<Cell, Elem>,
}

impl Structure {
    pub fn get(&self, cell: &Cell) -> Option<&Elem> {
        self.table.get(cell)
    }

    pub fn set(&mut self, cell: &Cell, value: Elem) {
        self.table.insert(cell.clone(), value);
    }
}

/// Extra data retained by scalar (single-object-per-group-element) models so
/// that the group-cohomology oracle can address the same instance.
#[derive(Clone, Debug)]
pub struct ScalarMeta {
    pub g_moduli: Vec<u32>,
}

/// A finite model in which 2-cell expressions can be evaluated.
#[derive(Clone, Debug)]
pub struct Instance {
    pub kind: ModelKind,
    pub sig: Signature,
    pub values: ValueGroup,
    pub ambient: BTreeMap<String, AmbientCell>,
    pub structure: Structure,
    pub scalar: Option<ScalarMeta>,
}

impl Instance {
    /// Source and target paths of a generator cell.
    pub fn cell_boundary(&self, cell: &Cell) -> Result<(OneCellPath, OneCellPath)> {
        let s = &self.sig;
        match cell {
            Cell::Ambient(name) => {
                let c = self
                    .ambient
                    .get(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                Ok((c.src.clone(), c.tgt.clone()))
            }
            Cell::Phi { f1, g1, f0, g0 } => {
                if f0.tgt != f1.src || g0.tgt != g1.src {
                    return Err(Error::NonComposable(format!(
                        "tensorator indices ({}, {}) after ({}, {})",
                        f1, g1, f0, g0
                    )));
                }
                let src = s.compose(&s.tensor_paths(f0, g0)?, &s.tensor_paths(f1, g1)?)?;
                let tgt = s.tensor_paths(&s.compose(f0, f1)?, &s.compose(g0, g1)?)?;
                Ok((src, tgt))
            }
            Cell::PhiUnit { a, b } => {
                let p = s.id_path(&s.obj_tensor(a, b)?);
                Ok((p.clone(), p))
            }
            Cell::Alpha1 { f, b, c } => {
                let src = s.whisker_r(&s.whisker_r(f, b)?, c)?;
                let tgt = s.whisker_r(f, &s.obj_tensor(b, c)?)?;
                Ok((src, tgt))
            }
            Cell::Alpha2 { a, g, c } => {
                let src = s.whisker_r(&s.whisker_l(a, g)?, c)?;
                let tgt = s.whisker_l(a, &s.whisker_r(g, c)?)?;
                Ok((src, tgt))
            }
            Cell::Alpha3 { a, b, h } => {
                let src = s.whisker_l(&s.obj_tensor(a, b)?, h)?;
                let tgt = s.whisker_l(a, &s.whisker_l(b, h)?)?;
                Ok((src, tgt))
            }
            Cell::LUnit { f } => Ok((s.whisker_l(&s.unit.clone(), f)?, f.clone())),
            Cell::RUnit { f } => Ok((s.whisker_r(f, &s.unit.clone())?, f.clone())),
            Cell::Pi { a, b, c, d } => {
                let ab = s.obj_tensor(a, b)?;
                let abc = s.obj_tensor(&ab, c)?;
                let p = s.id_path(&s.obj_tensor(&abc, d)?);
                Ok((p.clone(), p))
            }
            Cell::Lambda { a, b } | Cell::Mu { a, b } | Cell::Rho { a, b } => {
                let p = s.id_path(&s.obj_tensor(a, b)?);
                Ok((p.clone(), p))
            }
        }
    }

    /// Value of a generator cell. Structure cells not present in the tables
    /// evaluate to the identity; the tensorator at a pair of identity 1-cells
    /// is the identity unless the instance explicitly overrides it.
    pub fn cell_value(&self, cell: &Cell) -> Result<Elem> {
        match cell {
            Cell::Ambient(name) => self
                .ambient
                .get(name)
                .map(|c| c.value.clone())
                .ok_or_else(|| Error::UnknownGenerator(name.clone())),
            Cell::PhiUnit { .. } => Ok(self.values.zero()),
            _ => Ok(self
                .structure
                .get(cell)
                .cloned()
                .unwrap_or_else(|| self.values.zero())),
        }
    }

    /// Boundary of an expression, checking well-typedness structurally.
    pub fn boundary(&self, e: &TwoCellExpr) -> Result<(OneCellPath, OneCellPath)> {
        match e {
            TwoCellExpr::Gen(c) => self.cell_boundary(c),
            TwoCellExpr::Identity(p) => Ok((p.clone(), p.clone())),
            TwoCellExpr::VComp(a, b) => {
                let (sa, ta) = self.boundary(a)?;
                let (sb, tb) = self.boundary(b)?;
                if ta != sb {
                    return Err(Error::BoundaryMismatch {
                        at: "vertical composite".into(),
                        detail: format!("first ends at {ta}, second starts at {sb}"),
                    });
                }
                Ok((sa, tb))
            }
            TwoCellExpr::HComp(a, b) => {
                let (sa, ta) = self.boundary(a)?;
                let (sb, tb) = self.boundary(b)?;
                let src = self.sig.compose(&sa, &sb).map_err(|_| {
                    Error::BoundaryMismatch {
                        at: "horizontal composite".into(),
                        detail: format!(
                            "left factor lands at {}, right factor starts at {}",
                            sa.tgt, sb.src
                        ),
                    }
                })?;
                let tgt = self.sig.compose(&ta, &tb).map_err(|_| {
                    Error::BoundaryMismatch {
                        at: "horizontal composite".into(),
                        detail: format!(
                            "left factor lands at {}, right factor starts at {}",
                            ta.tgt, tb.src
                        ),
                    }
                })?;
                Ok((src, tgt))
            }
            TwoCellExpr::Tensor(a, b) => {
                let (sa, ta) = self.boundary(a)?;
                let (sb, tb) = self.boundary(b)?;
                Ok((
                    self.sig.tensor_paths(&sa, &sb)?,
                    self.sig.tensor_paths(&ta, &tb)?,
                ))
            }
            TwoCellExpr::Inverse(a) => {
                let (sa, ta) = self.boundary(a)?;
                Ok((ta, sa))
            }
        }
    }

    /// Evaluate an expression to a value of the alphabet.
    ///
    /// The expression is typed first, so ill-formed composites are rejected
    /// rather than folded.
    pub fn evaluate(&self, e: &TwoCellExpr) -> Result<Elem> {
        self.boundary(e)?;
        self.eval_unchecked(e)
    }

    fn eval_unchecked(&self, e: &TwoCellExpr) -> Result<Elem> {
        match e {
            TwoCellExpr::Gen(c) => self.cell_value(c),
            TwoCellExpr::Identity(_) => Ok(self.values.zero()),
            TwoCellExpr::VComp(a, b) => {
                let va = self.eval_unchecked(a)?;
                let vb = self.eval_unchecked(b)?;
                self.values.vcomp(&va, &vb)
            }
            TwoCellExpr::HComp(a, b) => {
                let va = self.eval_unchecked(a)?;
                let vb = self.eval_unchecked(b)?;
                self.values.hcomp(&va, &vb)
            }
            TwoCellExpr::Tensor(a, b) => {
                let va = self.eval_unchecked(a)?;
                let vb = self.eval_unchecked(b)?;
                self.values.tensor(&va, &vb)
            }
            TwoCellExpr::Inverse(a) => {
                let va = self.eval_unchecked(a)?;
                self.values.inverse(&va)
            }
        }
    }

    /// Decide whether two parallel expressions evaluate to the same 2-cell.
    /// Errors if the expressions are not parallel.
    pub fn equal_cells(&self, a: &TwoCellExpr, b: &TwoCellExpr) -> Result<bool> {
        let (sa, ta) = self.boundary(a)?;
        let (sb, tb) = self.boundary(b)?;
        if sa != sb || ta != tb {
            return Err(Error::BoundaryMismatch {
                at: "cell comparison".into(),
                detail: format!(
                    "sides are not parallel: {sa} => {ta} vs {sb} => {tb}"
                ),
            });
        }
        Ok(self.eval_unchecked(a)? == self.eval_unchecked(b)?)
    }

    /// Add `delta` (under vertical composition) to the stored value of a
    /// structure or ambient cell, returning the perturbed instance.
    pub fn perturb(&self, cell: &Cell, delta: &Elem) -> Result<Instance> {
        // Addressing a cell whose indices do not resolve in the signature is
        // a caller error, not a silent no-op.
        self.cell_boundary(cell)
            .map_err(|_| Error::UnknownLocation(cell.key()))?;
        let mut out = self.clone();
        match cell {
            Cell::Ambient(name) => {
                let c = out
                    .ambient
                    .get_mut(name)
                    .ok_or_else(|| Error::UnknownLocation(cell.key()))?;
                c.value = self.values.vcomp(&c.value, delta)?;
            }
            Cell::PhiUnit { .. } => {
                return Err(Error::UnknownLocation(
                    "the tensorator at identity 1-cells is pinned to the identity".into(),
                ))
            }
            _ => {
                let old = self.cell_value(cell)?;
                out.structure.set(cell, self.values.vcomp(&old, delta)?);
            }
        }
        Ok(out)
    }

    /// Validate structural invariants that do not depend on the document
    /// format: object tensor laws, ambient boundaries, structure cell
    /// boundaries and invertibility of structure values.
    pub fn validate(&self) -> Result<()> {
        self.sig.validate_obj_tensor()?;
        for (name, c) in &self.ambient {
            self.sig.path(&c.src.src, &c.src.gens).map_err(|e| {
                Error::validation(format!("two_cells.{name}.src"), e.to_string())
            })?;
            self.sig.path(&c.tgt.src, &c.tgt.gens).map_err(|e| {
                Error::validation(format!("two_cells.{name}.tgt"), e.to_string())
            })?;
            if c.src.src != c.tgt.src || c.src.tgt != c.tgt.tgt {
                return Err(Error::validation(
                    format!("two_cells.{name}"),
                    "source and target paths are not parallel",
                ));
            }
        }
        for (cell, value) in &self.structure.table {
            self.cell_boundary(cell).map_err(|e| {
                Error::validation(format!("monoidal.{}", cell.key()), e.to_string())
            })?;
            if !self.values.invertible(value) {
                return Err(Error::validation(
                    format!("monoidal.{}", cell.key()),
                    "structure 2-cells must be invertible",
                ));
            }
            if matches!(cell, Cell::PhiUnit { .. } | Cell::Ambient(_)) {
                return Err(Error::validation(
                    format!("monoidal.{}", cell.key()),
                    "not a structure component; the tensorator at identity \
                     1-cells is pinned to the identity",
                ));
            }
        }
        Ok(())
    }

    /// Enumerate the 1-cell paths of length at most `depth` (identities at
    /// every object, then composable generator words).
    pub fn one_cells_up_to(&self, depth: usize) -> Vec<OneCellPath> {
        let mut out: Vec<OneCellPath> = self
            .sig
            .objects
            .iter()
            .map(OneCellPath::identity)
            .collect();
        let mut layer: Vec<OneCellPath> = Vec::new();
        for g in self.sig.gens.keys() {
            if let Ok(p) = self.sig.gen_path(g) {
                layer.push(p);
            }
        }
        let gens = layer.clone();
        for _ in 0..depth {
            out.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for p in &layer {
                for g in &gens {
                    if p.tgt == g.src {
                        if let Ok(q) = self.sig.compose(p, g) {
                            next.push(q);
                        }
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        out
    }

    /// Ambient 2-cells as (name, cell) pairs in deterministic order.
    pub fn ambient_cells(&self) -> Vec<(String, &AmbientCell)> {
        self.ambient
            .iter()
            .map(|(n, c)| (n.clone(), c))
            .collect()
    }

    pub fn obj(&self, name: &str) -> Result<ObjId> {
        let o = ObjId(name.to_string());
        if self.sig.has_object(&o) {
            Ok(o)
        } else {
            Err(Error::UnknownGenerator(name.to_string()))
        }
    }

    pub fn gen1(&self, name: &str) -> Result<Gen1Id> {
        let g = Gen1Id(name.to_string());
        if self.sig.gens.contains_key(&g) {
            Ok(g)
        } else {
            Err(Error::UnknownGenerator(name.to_string()))
        }
    }
}
