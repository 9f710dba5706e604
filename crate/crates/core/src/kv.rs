//! Compatibility cells in the exchange style, expressed through the
//! tensorator.
//!
//! A one-piece tensor structure can instead be presented by exchange cells
//! that move `A (x) g` past `f (x) B'`. All three shapes are definable from
//! tensorator components, and rebuilding condition fillers through these
//! definitions must leave every report unchanged; the suite exposes a filler
//! style switch so that this can be checked end to end.

use crate::cell::{ObjId, OneCellPath, TwoCellExpr};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::monoidal::tensorator;

/// Exchange cell `[A (x) g, f (x) B'] => [f (x) B, A' (x) g]` for
/// `f: A -> A'` and `g: B -> B'`, defined as the tensorator at
/// `(f, id_{B'}, id_A, g)` followed by the inverse tensorator at
/// `(id_{A'}, g, f, id_B)`.
pub fn exchange(inst: &Instance, f: &OneCellPath, g: &OneCellPath) -> Result<TwoCellExpr> {
    let s = &inst.sig;
    let up = tensorator(
        f.clone(),
        s.id_path(&g.tgt),
        s.id_path(&f.src),
        g.clone(),
    );
    let down = tensorator(
        s.id_path(&f.tgt),
        g.clone(),
        f.clone(),
        s.id_path(&g.src),
    );
    Ok(TwoCellExpr::vcomp(up, TwoCellExpr::inverse(down)))
}

/// Composition-compatibility cell for two composable 1-cells whiskered by an
/// object on the right: the tensorator at `(f1, id_B, f0, id_B)`.
pub fn compat_right(inst: &Instance, f1: &OneCellPath, f0: &OneCellPath, b: &ObjId) -> Result<TwoCellExpr> {
    if f0.tgt != f1.src {
        return Err(Error::NonComposable(format!(
            "{f1} after {f0} in a right-whisker compatibility cell"
        )));
    }
    let id_b = inst.sig.id_path(b);
    Ok(tensorator(f1.clone(), id_b.clone(), f0.clone(), id_b))
}

/// Composition-compatibility cell for two composable 1-cells whiskered by an
/// object on the left: the tensorator at `(id_A, g1, id_A, g0)`.
pub fn compat_left(inst: &Instance, a: &ObjId, g1: &OneCellPath, g0: &OneCellPath) -> Result<TwoCellExpr> {
    if g0.tgt != g1.src {
        return Err(Error::NonComposable(format!(
            "{g1} after {g0} in a left-whisker compatibility cell"
        )));
    }
    let id_a = inst.sig.id_path(a);
    Ok(tensorator(id_a.clone(), g1.clone(), id_a, g0.clone()))
}
