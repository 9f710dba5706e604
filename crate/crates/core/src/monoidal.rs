//! Structure-cell constructors and the modified tensor product.
//!
//! The modified tensor of a 2-cell by an object conjugates the naive tensor
//! by folds of tensorator components, so that a 2-cell between composite
//! 1-cells can be whiskered by an object without leaving the image of the
//! tensor on generators.

use crate::cell::{Cell, ObjId, OneCellPath, TwoCellExpr};
use crate::error::Result;
use crate::instance::Instance;

/// Tensorator component `(f1 (x) g1) . (f0 (x) g0) => (f1 . f0) (x) (g1 . g0)`.
pub fn tensorator(
    f1: OneCellPath,
    g1: OneCellPath,
    f0: OneCellPath,
    g0: OneCellPath,
) -> TwoCellExpr {
    TwoCellExpr::gen(Cell::Phi { f1, g1, f0, g0 })
}

/// Tensorator component indexed by a pair of objects; pinned to the identity.
pub fn tensorator_unit(a: ObjId, b: ObjId) -> TwoCellExpr {
    TwoCellExpr::gen(Cell::PhiUnit { a, b })
}

/// Left fold of right-whisker tensorators along a path.
///
/// For `p = [p_1, ..., p_n]` this composes, for `k = 2..n`, the tensorator of
/// `p_k (x) id_E` after `(p_1 ... p_{k-1}) (x) id_E`, each whiskered into the
/// full right-whiskered path. For `n <= 1` it is the identity; for `n = 2` it
/// is exactly the single tensorator at `(p_2, id_E, p_1, id_E)`.
pub fn fold_tensor_right(inst: &Instance, p: &OneCellPath, e: &ObjId) -> Result<TwoCellExpr> {
    let s = &inst.sig;
    let whole = s.whisker_r(p, e)?;
    let mut expr = TwoCellExpr::identity(whole.clone());
    if p.len() <= 1 {
        return Ok(expr);
    }
    let id_e = s.id_path(e);
    for k in 1..p.len() {
        let prefix = s.sub_path(p, 0, k)?;
        let step = s.sub_path(p, k, k + 1)?;
        let cell = tensorator(step, id_e.clone(), prefix, id_e.clone());
        // The fold cell covers positions 0..k+1 of the whiskered path; wrap
        // it with the identity on the untouched tail.
        let tail = s.sub_path(&whole, k + 1, whole.len())?;
        let wrapped = if tail.is_empty() {
            cell
        } else {
            TwoCellExpr::hcomp(cell, TwoCellExpr::identity(tail))
        };
        expr = TwoCellExpr::vcomp(expr, wrapped);
    }
    Ok(expr)
}

/// Left fold of left-whisker tensorators along a path; mirror image of
/// [`fold_tensor_right`].
pub fn fold_tensor_left(inst: &Instance, a: &ObjId, p: &OneCellPath) -> Result<TwoCellExpr> {
    let s = &inst.sig;
    let whole = s.whisker_l(a, p)?;
    let mut expr = TwoCellExpr::identity(whole.clone());
    if p.len() <= 1 {
        return Ok(expr);
    }
    let id_a = s.id_path(a);
    for k in 1..p.len() {
        let prefix = s.sub_path(p, 0, k)?;
        let step = s.sub_path(p, k, k + 1)?;
        let cell = tensorator(id_a.clone(), step, id_a.clone(), prefix);
        let tail = s.sub_path(&whole, k + 1, whole.len())?;
        let wrapped = if tail.is_empty() {
            cell
        } else {
            TwoCellExpr::hcomp(cell, TwoCellExpr::identity(tail))
        };
        expr = TwoCellExpr::vcomp(expr, wrapped);
    }
    Ok(expr)
}

/// Modified tensor of a 2-cell by an object on the right:
/// fold the source, tensor with the identity on `e`, then unfold the target.
pub fn hat_tensor_right(inst: &Instance, alpha: &TwoCellExpr, e: &ObjId) -> Result<TwoCellExpr> {
    let (src, tgt) = inst.boundary(alpha)?;
    let fold_src = fold_tensor_right(inst, &src, e)?;
    let fold_tgt = fold_tensor_right(inst, &tgt, e)?;
    let middle = TwoCellExpr::tensor(
        alpha.clone(),
        TwoCellExpr::identity(inst.sig.id_path(e)),
    );
    Ok(TwoCellExpr::vcomp(
        TwoCellExpr::vcomp(fold_src, middle),
        TwoCellExpr::inverse(fold_tgt),
    ))
}

/// Modified tensor of a 2-cell by an object on the left.
pub fn hat_tensor_left(inst: &Instance, a: &ObjId, alpha: &TwoCellExpr) -> Result<TwoCellExpr> {
    let (src, tgt) = inst.boundary(alpha)?;
    let fold_src = fold_tensor_left(inst, a, &src)?;
    let fold_tgt = fold_tensor_left(inst, a, &tgt)?;
    let middle = TwoCellExpr::tensor(
        TwoCellExpr::identity(inst.sig.id_path(a)),
        alpha.clone(),
    );
    Ok(TwoCellExpr::vcomp(
        TwoCellExpr::vcomp(fold_src, middle),
        TwoCellExpr::inverse(fold_tgt),
    ))
}
