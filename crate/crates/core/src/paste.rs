//! Incremental pasting of 2-cells along a 1-cell path.
//!
//! A [`Pasting`] starts at a path and applies cells to contiguous segments,
//! recording every step. The accumulated expression is the vertical composite
//! of each applied cell whiskered by the identities on the untouched prefix
//! and suffix, and the recorded steps drive diagram export.

use crate::cell::{OneCellPath, TwoCellExpr};
use crate::error::{Error, Result};
use crate::instance::Instance;

/// One application of a cell inside a pasting.
#[derive(Clone, Debug)]
pub struct Step {
    /// Index of the first generator the cell consumed.
    pub at: usize,
    /// The applied cell (without whiskers).
    pub cell: TwoCellExpr,
    /// Source and target of the applied cell.
    pub cell_src: OneCellPath,
    pub cell_tgt: OneCellPath,
    /// The whole path after this step.
    pub after: OneCellPath,
}

/// A 2-cell under construction, from a fixed start path to the current path.
#[derive(Clone, Debug)]
pub struct Pasting {
    start: OneCellPath,
    current: OneCellPath,
    expr: Option<TwoCellExpr>,
    steps: Vec<Step>,
}

impl Pasting {
    pub fn new(start: OneCellPath) -> Self {
        Pasting {
            current: start.clone(),
            start,
            expr: None,
            steps: Vec::new(),
        }
    }

    pub fn current(&self) -> &OneCellPath {
        &self.current
    }

    pub fn start(&self) -> &OneCellPath {
        &self.start
    }

    /// Apply `cell` to the segment of `len` generators starting at `at`.
    ///
    /// The segment (as a path, including its endpoint objects) must equal
    /// the cell's source; it is replaced by the cell's target.
    pub fn apply(
        &mut self,
        inst: &Instance,
        at: usize,
        len: usize,
        cell: TwoCellExpr,
    ) -> Result<()> {
        let (cs, ct) = inst.boundary(&cell)?;
        if at + len > self.current.len() {
            return Err(Error::BoundaryMismatch {
                at: "pasting".into(),
                detail: format!(
                    "segment {at}..{} exceeds path of length {}",
                    at + len,
                    self.current.len()
                ),
            });
        }
        let segment = inst.sig.sub_path(&self.current, at, at + len)?;
        if segment != cs {
            return Err(Error::BoundaryMismatch {
                at: "pasting".into(),
                detail: format!("segment is {segment}, cell starts at {cs}"),
            });
        }
        let pre = inst.sig.sub_path(&self.current, 0, at)?;
        let post = inst.sig.sub_path(&self.current, at + len, self.current.len())?;
        let mut wrapped = cell.clone();
        if !post.is_empty() {
            wrapped = TwoCellExpr::hcomp(wrapped, TwoCellExpr::identity(post.clone()));
        }
        if !pre.is_empty() {
            wrapped = TwoCellExpr::hcomp(TwoCellExpr::identity(pre.clone()), wrapped);
        }
        let next = inst.sig.compose(&inst.sig.compose(&pre, &ct)?, &post)?;
        self.expr = Some(match self.expr.take() {
            None => wrapped,
            Some(e) => TwoCellExpr::vcomp(e, wrapped),
        });
        self.steps.push(Step {
            at,
            cell,
            cell_src: cs,
            cell_tgt: ct,
            after: next.clone(),
        });
        self.current = next;
        Ok(())
    }

    /// Apply `cell` across the whole current path.
    pub fn apply_whole(&mut self, inst: &Instance, cell: TwoCellExpr) -> Result<()> {
        let len = self.current.len();
        self.apply(inst, 0, len, cell)
    }

    /// Apply an endo cell of an identity path at the end of the current path.
    pub fn apply_at_end(&mut self, inst: &Instance, cell: TwoCellExpr) -> Result<()> {
        let len = self.current.len();
        self.apply(inst, len, 0, cell)
    }

    /// The accumulated expression, steps and final path.
    pub fn finish(self) -> (TwoCellExpr, Vec<Step>, OneCellPath) {
        let expr = self
            .expr
            .unwrap_or_else(|| TwoCellExpr::identity(self.start.clone()));
        (expr, self.steps, self.current)
    }
}
