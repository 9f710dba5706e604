//! Quantification domains and pasting recipes for each condition.
//!
//! Conventions shared by every recipe:
//! - both sides of a condition are built as pastings from the same start
//!   path, and the suite checks that they evaluate to the same 2-cell;
//! - conditions quantified over chains of composable 1-cells range over
//!   generators and identities, while single-path quantifiers additionally
//!   range over composite words up to the configured depth;
//! - ambient-2-cell quantifiers range over the declared cells of the
//!   instance.

use crate::cell::{Cell, ObjId, OneCellPath, TwoCellExpr};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::kv;
use crate::monoidal::{hat_tensor_left, hat_tensor_right, tensorator, tensorator_unit};
use crate::paste::Pasting;

use super::{CheckConfig, CheckInstance, ConditionId, FillerStyle};

/// One point of a condition's quantification domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple {
    pub tag: &'static str,
    pub names: Vec<String>,
    pub paths: Vec<OneCellPath>,
    pub objs: Vec<ObjId>,
}

impl Tuple {
    fn new(
        tag: &'static str,
        names: Vec<String>,
        paths: Vec<OneCellPath>,
        objs: Vec<ObjId>,
    ) -> Self {
        Tuple {
            tag,
            names,
            paths,
            objs,
        }
    }

    /// Index strings shown in reports and accepted by diagram export.
    pub fn indices(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.tag.is_empty() {
            out.push(self.tag.to_string());
        }
        out.extend(self.names.iter().cloned());
        out.extend(self.paths.iter().map(|p| p.key()));
        out.extend(self.objs.iter().map(|o| o.0.clone()));
        out
    }
}

/// Exchange filler for a pair of 1-cells, in the configured style.
fn ex(
    inst: &Instance,
    cfg: &CheckConfig,
    f: &OneCellPath,
    g: &OneCellPath,
) -> Result<TwoCellExpr> {
    match cfg.filler_style {
        FillerStyle::Exchange => kv::exchange(inst, f, g),
        FillerStyle::Tensorator => {
            let s = &inst.sig;
            Ok(TwoCellExpr::vcomp(
                tensorator(f.clone(), s.id_path(&g.tgt), s.id_path(&f.src), g.clone()),
                TwoCellExpr::inverse(tensorator(
                    s.id_path(&f.tgt),
                    g.clone(),
                    f.clone(),
                    s.id_path(&g.src),
                )),
            ))
        }
    }
}

/// Right-whisker compatibility filler, in the configured style.
fn cr(
    inst: &Instance,
    cfg: &CheckConfig,
    f1: &OneCellPath,
    f0: &OneCellPath,
    b: &ObjId,
) -> Result<TwoCellExpr> {
    match cfg.filler_style {
        FillerStyle::Exchange => kv::compat_right(inst, f1, f0, b),
        FillerStyle::Tensorator => {
            let id_b = inst.sig.id_path(b);
            Ok(tensorator(f1.clone(), id_b.clone(), f0.clone(), id_b))
        }
    }
}

/// Left-whisker compatibility filler, in the configured style.
fn cl(
    inst: &Instance,
    cfg: &CheckConfig,
    a: &ObjId,
    g1: &OneCellPath,
    g0: &OneCellPath,
) -> Result<TwoCellExpr> {
    match cfg.filler_style {
        FillerStyle::Exchange => kv::compat_left(inst, a, g1, g0),
        FillerStyle::Tensorator => {
            let id_a = inst.sig.id_path(a);
            Ok(tensorator(id_a.clone(), g1.clone(), id_a, g0.clone()))
        }
    }
}

/// Identities and generators, as paths.
fn short_paths(inst: &Instance) -> Vec<OneCellPath> {
    inst.one_cells_up_to(1)
}

fn chains2(paths: &[OneCellPath]) -> Vec<(OneCellPath, OneCellPath)> {
    let mut out = Vec::new();
    for p in paths {
        for q in paths {
            if p.tgt == q.src {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

fn chains3(paths: &[OneCellPath]) -> Vec<(OneCellPath, OneCellPath, OneCellPath)> {
    let mut out = Vec::new();
    for p in paths {
        for q in paths {
            if p.tgt != q.src {
                continue;
            }
            for r in paths {
                if q.tgt == r.src {
                    out.push((p.clone(), q.clone(), r.clone()));
                }
            }
        }
    }
    out
}

/// Ambient cells as (name, src, tgt) triples in declaration order.
fn ambient(inst: &Instance) -> Vec<(String, OneCellPath, OneCellPath)> {
    inst.ambient
        .iter()
        .map(|(n, c)| (n.clone(), c.src.clone(), c.tgt.clone()))
        .collect()
}

fn objs(inst: &Instance) -> Vec<ObjId> {
    inst.sig.objects.clone()
}

/// The quantification domain of a condition.
pub(super) fn tuples(inst: &Instance, id: ConditionId, cfg: &CheckConfig) -> Result<Vec<Tuple>> {
    let obs = objs(inst);
    let short = short_paths(inst);
    let deep = inst.one_cells_up_to(cfg.depth);
    let amb = ambient(inst);
    let mut out = Vec::new();
    match id {
        ConditionId::FunctorAxiom1 => {
            let fch = chains3(&short);
            for (f0, f1, f2) in &fch {
                for (g0, g1, g2) in &fch {
                    out.push(Tuple::new(
                        "comp",
                        vec![],
                        vec![
                            f0.clone(),
                            f1.clone(),
                            f2.clone(),
                            g0.clone(),
                            g1.clone(),
                            g2.clone(),
                        ],
                        vec![],
                    ));
                }
            }
            for f in &short {
                for g in &short {
                    out.push(Tuple::new("degen_pre", vec![], vec![f.clone(), g.clone()], vec![]));
                    out.push(Tuple::new("degen_post", vec![], vec![f.clone(), g.clone()], vec![]));
                }
            }
        }
        ConditionId::AssocNatF => {
            for (n, _, _) in &amb {
                for x in &obs {
                    for y in &obs {
                        for tag in ["slot1", "slot2", "slot3"] {
                            out.push(Tuple::new(
                                tag,
                                vec![n.clone()],
                                vec![],
                                vec![x.clone(), y.clone()],
                            ));
                        }
                    }
                }
            }
        }
        ConditionId::AssocNatObj => {
            for f in &deep {
                for g in &deep {
                    for c in &obs {
                        for tag in ["12", "13", "23"] {
                            out.push(Tuple::new(
                                tag,
                                vec![],
                                vec![f.clone(), g.clone()],
                                vec![c.clone()],
                            ));
                        }
                    }
                }
            }
        }
        ConditionId::AssocTransf => {
            for (f, f1) in chains2(&short) {
                for b in &obs {
                    for c in &obs {
                        out.push(Tuple::new(
                            "",
                            vec![],
                            vec![f.clone(), f1.clone()],
                            vec![b.clone(), c.clone()],
                        ));
                    }
                }
            }
        }
        ConditionId::UnitorNatFLeft | ConditionId::UnitorNatFRight => {
            for (n, _, _) in &amb {
                out.push(Tuple::new("", vec![n.clone()], vec![], vec![]));
            }
        }
        ConditionId::UnitorTransfLeft | ConditionId::UnitorTransfRight => {
            for (f, f1) in chains2(&short) {
                out.push(Tuple::new("", vec![], vec![f, f1], vec![]));
            }
        }
        ConditionId::TensNat1 => {
            for (n, _, _) in &amb {
                for g in &deep {
                    out.push(Tuple::new("", vec![n.clone()], vec![g.clone()], vec![]));
                }
            }
        }
        ConditionId::TensNat2 => {
            for (n, _, tgt) in &amb {
                for g in &deep {
                    if g.src == tgt.tgt {
                        for b in &obs {
                            out.push(Tuple::new(
                                "right",
                                vec![n.clone()],
                                vec![g.clone()],
                                vec![b.clone()],
                            ));
                        }
                        for a in &obs {
                            out.push(Tuple::new(
                                "left",
                                vec![n.clone()],
                                vec![g.clone()],
                                vec![a.clone()],
                            ));
                        }
                    }
                }
            }
        }
        ConditionId::TensNat3 => {
            for (f, f1) in chains2(&short) {
                for g in &short {
                    out.push(Tuple::new(
                        "",
                        vec![],
                        vec![f.clone(), f1.clone(), g.clone()],
                        vec![],
                    ));
                }
            }
        }
        ConditionId::TensTransf => {
            for (f, f1, f2) in chains3(&short) {
                for b in &obs {
                    out.push(Tuple::new(
                        "right",
                        vec![],
                        vec![f.clone(), f1.clone(), f2.clone()],
                        vec![b.clone()],
                    ));
                    out.push(Tuple::new(
                        "left",
                        vec![],
                        vec![f.clone(), f1.clone(), f2.clone()],
                        vec![b.clone()],
                    ));
                }
            }
        }
        ConditionId::ModLambda | ConditionId::ModMu | ConditionId::ModRho => {
            for f in &deep {
                for b in &obs {
                    out.push(Tuple::new("", vec![], vec![f.clone()], vec![b.clone()]));
                }
            }
        }
        ConditionId::ModPent => {
            for f in &deep {
                for b in &obs {
                    for c in &obs {
                        for d in &obs {
                            out.push(Tuple::new(
                                "",
                                vec![],
                                vec![f.clone()],
                                vec![b.clone(), c.clone(), d.clone()],
                            ));
                        }
                    }
                }
            }
        }
        ConditionId::Stasheff => {
            for a in &obs {
                for b in &obs {
                    for c in &obs {
                        for d in &obs {
                            for e in &obs {
                                out.push(Tuple::new(
                                    "",
                                    vec![],
                                    vec![],
                                    vec![
                                        a.clone(),
                                        b.clone(),
                                        c.clone(),
                                        d.clone(),
                                        e.clone(),
                                    ],
                                ));
                            }
                        }
                    }
                }
            }
        }
        ConditionId::UnitPoly1 | ConditionId::UnitPoly2 => {
            for a in &obs {
                for b in &obs {
                    for c in &obs {
                        out.push(Tuple::new(
                            "",
                            vec![],
                            vec![],
                            vec![a.clone(), b.clone(), c.clone()],
                        ));
                    }
                }
            }
        }
        ConditionId::CorRId => {
            for a in &obs {
                out.push(Tuple::new("right", vec![], vec![], vec![a.clone()]));
                out.push(Tuple::new("left", vec![], vec![], vec![a.clone()]));
            }
        }
        ConditionId::CorAlphaId => {
            for a in &obs {
                for b in &obs {
                    for c in &obs {
                        for tag in ["slot1", "slot2", "slot3", "route"] {
                            out.push(Tuple::new(
                                tag,
                                vec![],
                                vec![],
                                vec![a.clone(), b.clone(), c.clone()],
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn amb_cell(inst: &Instance, name: &str) -> Result<(TwoCellExpr, OneCellPath, OneCellPath)> {
    let c = inst
        .ambient
        .get(name)
        .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
    Ok((
        TwoCellExpr::gen(Cell::Ambient(name.to_string())),
        c.src.clone(),
        c.tgt.clone(),
    ))
}

fn done(
    id: ConditionId,
    t: &Tuple,
    lhs: Pasting,
    rhs: Pasting,
) -> CheckInstance {
    let src = lhs.start().clone();
    let (le, ls, lp) = lhs.finish();
    let (re, rs, _) = rhs.finish();
    CheckInstance {
        id,
        indices: t.indices(),
        lhs: le,
        rhs: re,
        lhs_steps: ls,
        rhs_steps: rs,
        src,
        tgt: lp,
    }
}

/// Build the check at one tuple.
pub(super) fn build(
    inst: &Instance,
    id: ConditionId,
    cfg: &CheckConfig,
    t: &Tuple,
) -> Result<CheckInstance> {
    let s = &inst.sig;
    match (id, t.tag) {
        (ConditionId::FunctorAxiom1, "comp") => {
            let [f0, f1, f2, g0, g1, g2] = match t.paths.as_slice() {
                [a, b, c, d, e, f] => [a, b, c, d, e, f],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let t0 = s.tensor_paths(f0, g0)?;
            let t1 = s.tensor_paths(f1, g1)?;
            let t2 = s.tensor_paths(f2, g2)?;
            let start = s.compose(&s.compose(&t0, &t1)?, &t2)?;
            let f01 = s.compose(f0, f1)?;
            let g01 = s.compose(g0, g1)?;
            let f12 = s.compose(f1, f2)?;
            let g12 = s.compose(g1, g2)?;
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                t0.len() + t1.len(),
                tensorator(f1.clone(), g1.clone(), f0.clone(), g0.clone()),
            )?;
            l.apply_whole(
                inst,
                tensorator(f2.clone(), g2.clone(), f01, g01),
            )?;
            let mut r = Pasting::new(start);
            r.apply(
                inst,
                t0.len(),
                t1.len() + t2.len(),
                tensorator(f2.clone(), g2.clone(), f1.clone(), g1.clone()),
            )?;
            r.apply_whole(
                inst,
                tensorator(f12, g12, f0.clone(), g0.clone()),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::FunctorAxiom1, tag @ ("degen_pre" | "degen_post")) => {
            let [f, g] = match t.paths.as_slice() {
                [a, b] => [a, b],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let start = s.tensor_paths(f, g)?;
            let cell = if tag == "degen_pre" {
                // Pre-composing with the identity pair.
                tensorator(
                    f.clone(),
                    g.clone(),
                    s.id_path(&f.src),
                    s.id_path(&g.src),
                )
            } else {
                // Post-composing with the identity pair.
                tensorator(
                    s.id_path(&f.tgt),
                    s.id_path(&g.tgt),
                    f.clone(),
                    g.clone(),
                )
            };
            let mut l = Pasting::new(start.clone());
            l.apply_whole(inst, cell)?;
            let r = Pasting::new(start);
            Ok(done(id, t, l, r))
        }
        (ConditionId::AssocNatF, tag) => {
            let (gamma, f, f1) = amb_cell(inst, &t.names[0])?;
            let (x, y) = (&t.objs[0], &t.objs[1]);
            match tag {
                "slot1" => {
                    let (b, c) = (x, y);
                    let start = s.whisker_r(&s.whisker_r(&f, b)?, c)?;
                    let bc = s.obj_tensor(b, c)?;
                    let mut l = Pasting::new(start.clone());
                    l.apply_whole(
                        inst,
                        TwoCellExpr::tensor(
                            TwoCellExpr::tensor(
                                gamma.clone(),
                                TwoCellExpr::identity(s.id_path(b)),
                            ),
                            TwoCellExpr::identity(s.id_path(c)),
                        ),
                    )?;
                    l.apply_whole(
                        inst,
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: f1.clone(),
                            b: b.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    r.apply_whole(
                        inst,
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: f.clone(),
                            b: b.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    r.apply_whole(
                        inst,
                        TwoCellExpr::tensor(gamma, TwoCellExpr::identity(s.id_path(&bc))),
                    )?;
                    Ok(done(id, t, l, r))
                }
                "slot2" => {
                    let (a, c) = (x, y);
                    let start = s.whisker_r(&s.whisker_l(a, &f)?, c)?;
                    let mut l = Pasting::new(start.clone());
                    l.apply_whole(
                        inst,
                        TwoCellExpr::tensor(
                            TwoCellExpr::tensor(
                                TwoCellExpr::identity(s.id_path(a)),
                                gamma.clone(),
                            ),
                            TwoCellExpr::identity(s.id_path(c)),
                        ),
                    )?;
                    l.apply_whole(
                        inst,
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: a.clone(),
                            g: f1.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    r.apply_whole(
                        inst,
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: a.clone(),
                            g: f.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    r.apply_whole(
                        inst,
                        TwoCellExpr::tensor(
                            TwoCellExpr::identity(s.id_path(a)),
                            TwoCellExpr::tensor(gamma, TwoCellExpr::identity(s.id_path(c))),
                        ),
                    )?;
                    Ok(done(id, t, l, r))
                }
                _ => {
                    let (a, b) = (x, y);
                    let ab = s.obj_tensor(a, b)?;
                    let start = s.whisker_l(&ab, &f)?;
                    let mut l = Pasting::new(start.clone());
                    l.apply_whole(
                        inst,
                        TwoCellExpr::tensor(
                            TwoCellExpr::identity(s.id_path(&ab)),
                            gamma.clone(),
                        ),
                    )?;
                    l.apply_whole(
                        inst,
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: a.clone(),
                            b: b.clone(),
                            h: f1.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    r.apply_whole(
                        inst,
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: a.clone(),
                            b: b.clone(),
                            h: f.clone(),
                        }),
                    )?;
                    r.apply_whole(
                        inst,
                        TwoCellExpr::tensor(
                            TwoCellExpr::identity(s.id_path(a)),
                            TwoCellExpr::tensor(TwoCellExpr::identity(s.id_path(b)), gamma),
                        ),
                    )?;
                    Ok(done(id, t, l, r))
                }
            }
        }
        (ConditionId::AssocNatObj, tag) => {
            let [p, q] = match t.paths.as_slice() {
                [a, b] => [a, b],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let spec = &t.objs[0];
            match tag {
                "12" => {
                    // Moving 1-cells in slots one and two, spectator third.
                    let (f, g, c) = (p, q, spec);
                    let start = s.whisker_r(
                        &s.compose(&s.whisker_r(f, &g.src)?, &s.whisker_l(&f.tgt, g)?)?,
                        c,
                    )?;
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        f.len(),
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: f.clone(),
                            b: g.src.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    l.apply(
                        inst,
                        f.len(),
                        g.len(),
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: f.tgt.clone(),
                            g: g.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    let down = TwoCellExpr::inverse(ex(inst, cfg, f, g)?);
                    r.apply_whole(inst, hat_tensor_right(inst, &down, c)?)?;
                    r.apply(
                        inst,
                        0,
                        g.len(),
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: f.src.clone(),
                            g: g.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    r.apply(
                        inst,
                        g.len(),
                        f.len(),
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: f.clone(),
                            b: g.tgt.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    r.apply_whole(inst, ex(inst, cfg, f, &s.whisker_r(g, c)?)?)?;
                    Ok(done(id, t, l, r))
                }
                "13" => {
                    // Moving 1-cells in slots one and three, spectator second.
                    let (f, h, b) = (p, q, spec);
                    let fb = s.whisker_r(f, b)?;
                    let start = s.compose(
                        &s.whisker_r(&fb, &h.src)?,
                        &s.whisker_l(&s.obj_tensor(&f.tgt, b)?, h)?,
                    )?;
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        f.len(),
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: f.clone(),
                            b: b.clone(),
                            c: h.src.clone(),
                        }),
                    )?;
                    l.apply(
                        inst,
                        f.len(),
                        h.len(),
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: f.tgt.clone(),
                            b: b.clone(),
                            h: h.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    r.apply_whole(inst, TwoCellExpr::inverse(ex(inst, cfg, &fb, h)?))?;
                    r.apply(
                        inst,
                        0,
                        h.len(),
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: f.src.clone(),
                            b: b.clone(),
                            h: h.clone(),
                        }),
                    )?;
                    r.apply(
                        inst,
                        h.len(),
                        f.len(),
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: f.clone(),
                            b: b.clone(),
                            c: h.tgt.clone(),
                        }),
                    )?;
                    r.apply_whole(inst, ex(inst, cfg, f, &s.whisker_l(b, h)?)?)?;
                    Ok(done(id, t, l, r))
                }
                _ => {
                    // Moving 1-cells in slots two and three, spectator first.
                    let (g, h, a) = (p, q, spec);
                    let ag = s.whisker_l(a, g)?;
                    let start = s.compose(
                        &s.whisker_r(&ag, &h.src)?,
                        &s.whisker_l(&s.obj_tensor(a, &g.tgt)?, h)?,
                    )?;
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        g.len(),
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: a.clone(),
                            g: g.clone(),
                            c: h.src.clone(),
                        }),
                    )?;
                    l.apply(
                        inst,
                        g.len(),
                        h.len(),
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: a.clone(),
                            b: g.tgt.clone(),
                            h: h.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    r.apply_whole(inst, TwoCellExpr::inverse(ex(inst, cfg, &ag, h)?))?;
                    r.apply(
                        inst,
                        0,
                        h.len(),
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: a.clone(),
                            b: g.src.clone(),
                            h: h.clone(),
                        }),
                    )?;
                    r.apply(
                        inst,
                        h.len(),
                        g.len(),
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: a.clone(),
                            g: g.clone(),
                            c: h.tgt.clone(),
                        }),
                    )?;
                    r.apply_whole(inst, hat_tensor_left(inst, a, &ex(inst, cfg, g, h)?)?)?;
                    Ok(done(id, t, l, r))
                }
            }
        }
        (ConditionId::AssocTransf, _) => {
            let [f, f1] = match t.paths.as_slice() {
                [a, b] => [a, b],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let (b, c) = (&t.objs[0], &t.objs[1]);
            let ff1 = s.compose(f, f1)?;
            let bc = s.obj_tensor(b, c)?;
            let start = s.whisker_r(&s.whisker_r(&ff1, b)?, c)?;
            let mut l = Pasting::new(start.clone());
            l.apply_whole(
                inst,
                hat_tensor_right(inst, &cr(inst, cfg, f1, f, b)?, c)?,
            )?;
            l.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: ff1.clone(),
                    b: b.clone(),
                    c: c.clone(),
                }),
            )?;
            let mut r = Pasting::new(start);
            r.apply(
                inst,
                f.len(),
                f1.len(),
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: f1.clone(),
                    b: b.clone(),
                    c: c.clone(),
                }),
            )?;
            r.apply(
                inst,
                0,
                f.len(),
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: f.clone(),
                    b: b.clone(),
                    c: c.clone(),
                }),
            )?;
            r.apply_whole(inst, cr(inst, cfg, f1, f, &bc)?)?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::UnitorNatFLeft, _) => {
            let (gamma, f, f1) = amb_cell(inst, &t.names[0])?;
            let unit = s.unit.clone();
            let start = s.whisker_l(&unit, &f)?;
            let mut l = Pasting::new(start.clone());
            l.apply_whole(
                inst,
                TwoCellExpr::tensor(TwoCellExpr::identity(s.id_path(&unit)), gamma.clone()),
            )?;
            l.apply_whole(inst, TwoCellExpr::gen(Cell::LUnit { f: f1 }))?;
            let mut r = Pasting::new(start);
            r.apply_whole(inst, TwoCellExpr::gen(Cell::LUnit { f }))?;
            r.apply_whole(inst, gamma)?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::UnitorNatFRight, _) => {
            let (gamma, f, f1) = amb_cell(inst, &t.names[0])?;
            let unit = s.unit.clone();
            let start = s.whisker_r(&f, &unit)?;
            let mut l = Pasting::new(start.clone());
            l.apply_whole(
                inst,
                TwoCellExpr::tensor(gamma.clone(), TwoCellExpr::identity(s.id_path(&unit))),
            )?;
            l.apply_whole(inst, TwoCellExpr::gen(Cell::RUnit { f: f1 }))?;
            let mut r = Pasting::new(start);
            r.apply_whole(inst, TwoCellExpr::gen(Cell::RUnit { f }))?;
            r.apply_whole(inst, gamma)?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::UnitorTransfLeft, _) => {
            let [f, f1] = match t.paths.as_slice() {
                [a, b] => [a, b],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let unit = s.unit.clone();
            let ff1 = s.compose(f, f1)?;
            let start = s.compose(&s.whisker_l(&unit, f)?, &s.whisker_l(&unit, f1)?)?;
            let mut l = Pasting::new(start.clone());
            l.apply_whole(inst, cl(inst, cfg, &unit, f1, f)?)?;
            l.apply_whole(inst, TwoCellExpr::gen(Cell::LUnit { f: ff1 }))?;
            let mut r = Pasting::new(start);
            r.apply(inst, 0, f.len(), TwoCellExpr::gen(Cell::LUnit { f: f.clone() }))?;
            r.apply(
                inst,
                f.len(),
                f1.len(),
                TwoCellExpr::gen(Cell::LUnit { f: f1.clone() }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::UnitorTransfRight, _) => {
            let [f, f1] = match t.paths.as_slice() {
                [a, b] => [a, b],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let unit = s.unit.clone();
            let ff1 = s.compose(f, f1)?;
            let start = s.compose(&s.whisker_r(f, &unit)?, &s.whisker_r(f1, &unit)?)?;
            let mut l = Pasting::new(start.clone());
            l.apply_whole(inst, cr(inst, cfg, f1, f, &unit)?)?;
            l.apply_whole(inst, TwoCellExpr::gen(Cell::RUnit { f: ff1 }))?;
            let mut r = Pasting::new(start);
            r.apply(inst, 0, f.len(), TwoCellExpr::gen(Cell::RUnit { f: f.clone() }))?;
            r.apply(
                inst,
                f.len(),
                f1.len(),
                TwoCellExpr::gen(Cell::RUnit { f: f1.clone() }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::TensNat1, _) => {
            let (gamma, f, f1) = amb_cell(inst, &t.names[0])?;
            let g = &t.paths[0];
            let start = s.compose(&s.whisker_l(&f.src, g)?, &s.whisker_r(&f, &g.tgt)?)?;
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                g.len(),
                f.len(),
                TwoCellExpr::tensor(
                    gamma.clone(),
                    TwoCellExpr::identity(s.id_path(&g.tgt)),
                ),
            )?;
            l.apply_whole(inst, ex(inst, cfg, &f1, g)?)?;
            let mut r = Pasting::new(start);
            r.apply_whole(inst, ex(inst, cfg, &f, g)?)?;
            r.apply(
                inst,
                0,
                f.len(),
                TwoCellExpr::tensor(gamma, TwoCellExpr::identity(s.id_path(&g.src))),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::TensNat2, tag) => {
            let (gamma, f, f1) = amb_cell(inst, &t.names[0])?;
            let g = &t.paths[0];
            let x = &t.objs[0];
            if tag == "right" {
                let b = x;
                let start = s.compose(&s.whisker_r(&f, b)?, &s.whisker_r(g, b)?)?;
                let mut l = Pasting::new(start.clone());
                l.apply(
                    inst,
                    0,
                    f.len(),
                    TwoCellExpr::tensor(
                        gamma.clone(),
                        TwoCellExpr::identity(s.id_path(b)),
                    ),
                )?;
                l.apply_whole(inst, cr(inst, cfg, g, &f1, b)?)?;
                let mut r = Pasting::new(start);
                r.apply_whole(inst, cr(inst, cfg, g, &f, b)?)?;
                r.apply_whole(
                    inst,
                    TwoCellExpr::tensor(
                        TwoCellExpr::hcomp(gamma, TwoCellExpr::identity(g.clone())),
                        TwoCellExpr::identity(s.id_path(b)),
                    ),
                )?;
                Ok(done(id, t, l, r))
            } else {
                let a = x;
                let start = s.compose(&s.whisker_l(a, &f)?, &s.whisker_l(a, g)?)?;
                let mut l = Pasting::new(start.clone());
                l.apply(
                    inst,
                    0,
                    f.len(),
                    TwoCellExpr::tensor(
                        TwoCellExpr::identity(s.id_path(a)),
                        gamma.clone(),
                    ),
                )?;
                l.apply_whole(inst, cl(inst, cfg, a, g, &f1)?)?;
                let mut r = Pasting::new(start);
                r.apply_whole(inst, cl(inst, cfg, a, g, &f)?)?;
                r.apply_whole(
                    inst,
                    TwoCellExpr::tensor(
                        TwoCellExpr::identity(s.id_path(a)),
                        TwoCellExpr::hcomp(gamma, TwoCellExpr::identity(g.clone())),
                    ),
                )?;
                Ok(done(id, t, l, r))
            }
        }
        (ConditionId::TensNat3, _) => {
            let [f, f1, g] = match t.paths.as_slice() {
                [a, b, c] => [a, b, c],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let ff1 = s.compose(f, f1)?;
            let start = s.compose(
                &s.compose(&s.whisker_l(&f.src, g)?, &s.whisker_r(f, &g.tgt)?)?,
                &s.whisker_r(f1, &g.tgt)?,
            )?;
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                g.len(),
                f.len() + f1.len(),
                cr(inst, cfg, f1, f, &g.tgt)?,
            )?;
            l.apply_whole(inst, ex(inst, cfg, &ff1, g)?)?;
            let mut r = Pasting::new(start);
            r.apply(inst, 0, g.len() + f.len(), ex(inst, cfg, f, g)?)?;
            r.apply(
                inst,
                f.len(),
                g.len() + f1.len(),
                ex(inst, cfg, f1, g)?,
            )?;
            r.apply(
                inst,
                0,
                f.len() + f1.len(),
                cr(inst, cfg, f1, f, &g.src)?,
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::TensTransf, tag) => {
            let [f, f1, f2] = match t.paths.as_slice() {
                [a, b, c] => [a, b, c],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let x = &t.objs[0];
            let f01 = s.compose(f, f1)?;
            let f12 = s.compose(f1, f2)?;
            if tag == "right" {
                let start = s.compose(
                    &s.compose(&s.whisker_r(f, x)?, &s.whisker_r(f1, x)?)?,
                    &s.whisker_r(f2, x)?,
                )?;
                let mut l = Pasting::new(start.clone());
                l.apply(inst, 0, f.len() + f1.len(), cr(inst, cfg, f1, f, x)?)?;
                l.apply_whole(inst, cr(inst, cfg, f2, &f01, x)?)?;
                let mut r = Pasting::new(start);
                r.apply(
                    inst,
                    f.len(),
                    f1.len() + f2.len(),
                    cr(inst, cfg, f2, f1, x)?,
                )?;
                r.apply_whole(inst, cr(inst, cfg, &f12, f, x)?)?;
                Ok(done(id, t, l, r))
            } else {
                let start = s.compose(
                    &s.compose(&s.whisker_l(x, f)?, &s.whisker_l(x, f1)?)?,
                    &s.whisker_l(x, f2)?,
                )?;
                let mut l = Pasting::new(start.clone());
                l.apply(inst, 0, f.len() + f1.len(), cl(inst, cfg, x, f1, f)?)?;
                l.apply_whole(inst, cl(inst, cfg, x, f2, &f01)?)?;
                let mut r = Pasting::new(start);
                r.apply(
                    inst,
                    f.len(),
                    f1.len() + f2.len(),
                    cl(inst, cfg, x, f2, f1)?,
                )?;
                r.apply_whole(inst, cl(inst, cfg, x, &f12, f)?)?;
                Ok(done(id, t, l, r))
            }
        }
        (ConditionId::ModLambda, _) => {
            let f = &t.paths[0];
            let b = &t.objs[0];
            let unit = s.unit.clone();
            let start = s.whisker_r(&s.whisker_l(&unit, f)?, b)?;
            let fb = s.whisker_r(f, b)?;
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Lambda {
                    a: f.src.clone(),
                    b: b.clone(),
                }),
            )?;
            l.apply_whole(
                inst,
                TwoCellExpr::tensor(
                    TwoCellExpr::gen(Cell::LUnit { f: f.clone() }),
                    TwoCellExpr::identity(s.id_path(b)),
                ),
            )?;
            let mut r = Pasting::new(start);
            r.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha2 {
                    a: unit.clone(),
                    g: f.clone(),
                    c: b.clone(),
                }),
            )?;
            r.apply_whole(inst, TwoCellExpr::gen(Cell::LUnit { f: fb }))?;
            r.apply_at_end(
                inst,
                TwoCellExpr::gen(Cell::Lambda {
                    a: f.tgt.clone(),
                    b: b.clone(),
                }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::ModMu, _) => {
            let f = &t.paths[0];
            let b = &t.objs[0];
            let unit = s.unit.clone();
            let start = s.whisker_r(&s.whisker_r(f, &unit)?, b)?;
            let id_a = s.id_path(&f.src);
            let id_a1 = s.id_path(&f.tgt);
            let id_b = s.id_path(b);
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Mu {
                    a: f.src.clone(),
                    b: b.clone(),
                }),
            )?;
            l.apply_whole(
                inst,
                TwoCellExpr::tensor(
                    TwoCellExpr::gen(Cell::RUnit { f: f.clone() }),
                    TwoCellExpr::identity(id_b.clone()),
                ),
            )?;
            let mut r = Pasting::new(start);
            r.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: f.clone(),
                    b: unit.clone(),
                    c: b.clone(),
                }),
            )?;
            r.apply_whole(
                inst,
                tensorator(f.clone(), id_b.clone(), id_a, id_b.clone()),
            )?;
            r.apply_whole(
                inst,
                TwoCellExpr::tensor(
                    TwoCellExpr::identity(f.clone()),
                    TwoCellExpr::gen(Cell::LUnit { f: id_b.clone() }),
                ),
            )?;
            r.apply_whole(
                inst,
                TwoCellExpr::inverse(tensorator(id_a1, id_b.clone(), f.clone(), id_b)),
            )?;
            r.apply_at_end(
                inst,
                TwoCellExpr::gen(Cell::Mu {
                    a: f.tgt.clone(),
                    b: b.clone(),
                }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::ModRho, _) => {
            let f = &t.paths[0];
            let b = &t.objs[0];
            let unit = s.unit.clone();
            let start = s.whisker_r(&s.whisker_r(f, b)?, &unit)?;
            let fb = s.whisker_r(f, b)?;
            let id_a = s.id_path(&f.src);
            let id_a1 = s.id_path(&f.tgt);
            let id_b = s.id_path(b);
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Rho {
                    a: f.src.clone(),
                    b: b.clone(),
                }),
            )?;
            l.apply_whole(inst, TwoCellExpr::gen(Cell::RUnit { f: fb }))?;
            let mut r = Pasting::new(start);
            r.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: f.clone(),
                    b: b.clone(),
                    c: unit.clone(),
                }),
            )?;
            r.apply_whole(
                inst,
                tensorator(f.clone(), id_b.clone(), id_a, id_b.clone()),
            )?;
            r.apply_whole(
                inst,
                TwoCellExpr::tensor(
                    TwoCellExpr::identity(f.clone()),
                    TwoCellExpr::gen(Cell::RUnit { f: id_b.clone() }),
                ),
            )?;
            r.apply_whole(
                inst,
                TwoCellExpr::inverse(tensorator(id_a1, id_b.clone(), f.clone(), id_b)),
            )?;
            r.apply_at_end(
                inst,
                TwoCellExpr::gen(Cell::Rho {
                    a: f.tgt.clone(),
                    b: b.clone(),
                }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::ModPent, _) => {
            let f = &t.paths[0];
            let (b, c, d) = (&t.objs[0], &t.objs[1], &t.objs[2]);
            let fb = s.whisker_r(f, b)?;
            let cd = s.obj_tensor(c, d)?;
            let bc = s.obj_tensor(b, c)?;
            let bcd = s.obj_tensor(&bc, d)?;
            let start = s.whisker_r(&s.whisker_r(&fb, c)?, d)?;
            let id_a = s.id_path(&f.src);
            let id_a1 = s.id_path(&f.tgt);
            let id_bcd = s.id_path(&bcd);
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Pi {
                    a: f.src.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    d: d.clone(),
                }),
            )?;
            l.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: fb,
                    b: c.clone(),
                    c: d.clone(),
                }),
            )?;
            l.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: f.clone(),
                    b: b.clone(),
                    c: cd.clone(),
                }),
            )?;
            let mut r = Pasting::new(start);
            let inner = TwoCellExpr::gen(Cell::Alpha1 {
                f: f.clone(),
                b: b.clone(),
                c: c.clone(),
            });
            r.apply_whole(inst, hat_tensor_right(inst, &inner, d)?)?;
            r.apply_whole(
                inst,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: f.clone(),
                    b: bc,
                    c: d.clone(),
                }),
            )?;
            r.apply_whole(
                inst,
                tensorator(f.clone(), id_bcd.clone(), id_a, id_bcd.clone()),
            )?;
            r.apply_whole(
                inst,
                TwoCellExpr::inverse(tensorator(id_a1, id_bcd.clone(), f.clone(), id_bcd)),
            )?;
            r.apply_at_end(
                inst,
                TwoCellExpr::gen(Cell::Pi {
                    a: f.tgt.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    d: d.clone(),
                }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::Stasheff, _) => {
            let [a, b, c, d, e] = match t.objs.as_slice() {
                [a, b, c, d, e] => [a, b, c, d, e],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let ab = s.obj_tensor(a, b)?;
            let bc = s.obj_tensor(b, c)?;
            let cd = s.obj_tensor(c, d)?;
            let de = s.obj_tensor(d, e)?;
            let abc = s.obj_tensor(&ab, c)?;
            let bcd = s.obj_tensor(&bc, d)?;
            let cde = s.obj_tensor(&cd, e)?;
            let x = s.obj_tensor(&s.obj_tensor(&abc, d)?, e)?;
            let start = s.id_path(&x);
            let pi = |a: &ObjId, b: &ObjId, c: &ObjId, d: &ObjId| {
                TwoCellExpr::gen(Cell::Pi {
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    d: d.clone(),
                })
            };
            let mut l = Pasting::new(start.clone());
            l.apply(inst, 0, 0, hat_tensor_left(inst, a, &pi(b, c, d, e))?)?;
            l.apply(inst, 0, 0, pi(a, &bc, d, e))?;
            l.apply(inst, 0, 0, pi(a, b, c, &de))?;
            // Square face: the associator at the bracketing 1-cell of
            // (B, C, D), whiskered between A and E.
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Alpha2 {
                    a: a.clone(),
                    g: s.id_path(&bcd),
                    c: e.clone(),
                }),
            )?;
            let mut r = Pasting::new(start);
            r.apply(inst, 0, 0, hat_tensor_right(inst, &pi(a, b, c, d), e)?)?;
            r.apply(inst, 0, 0, pi(a, b, &cd, e))?;
            r.apply(inst, 0, 0, pi(&ab, c, d, e))?;
            r.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Alpha1 {
                    f: s.id_path(&abc),
                    b: d.clone(),
                    c: e.clone(),
                }),
            )?;
            r.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Alpha3 {
                    a: a.clone(),
                    b: b.clone(),
                    h: s.id_path(&cde),
                }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::UnitPoly1, _) => {
            let [a, b, c] = match t.objs.as_slice() {
                [a, b, c] => [a, b, c],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let unit = s.unit.clone();
            let bc = s.obj_tensor(b, c)?;
            let x = s.obj_tensor(&s.obj_tensor(a, b)?, c)?;
            let start = s.id_path(&x);
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                0,
                hat_tensor_right(
                    inst,
                    &TwoCellExpr::gen(Cell::Mu {
                        a: a.clone(),
                        b: b.clone(),
                    }),
                    c,
                )?,
            )?;
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Pi {
                    a: a.clone(),
                    b: unit,
                    c: b.clone(),
                    d: c.clone(),
                }),
            )?;
            let mut r = Pasting::new(start);
            r.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Mu {
                    a: a.clone(),
                    b: bc,
                }),
            )?;
            r.apply(
                inst,
                0,
                0,
                hat_tensor_left(
                    inst,
                    a,
                    &TwoCellExpr::gen(Cell::Lambda {
                        a: b.clone(),
                        b: c.clone(),
                    }),
                )?,
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::UnitPoly2, _) => {
            let [a, b, c] = match t.objs.as_slice() {
                [a, b, c] => [a, b, c],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let unit = s.unit.clone();
            let ab = s.obj_tensor(a, b)?;
            let x = s.obj_tensor(&ab, c)?;
            let start = s.id_path(&x);
            let mut l = Pasting::new(start.clone());
            l.apply(
                inst,
                0,
                0,
                hat_tensor_left(
                    inst,
                    a,
                    &TwoCellExpr::gen(Cell::Mu {
                        a: b.clone(),
                        b: c.clone(),
                    }),
                )?,
            )?;
            l.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Pi {
                    a: a.clone(),
                    b: b.clone(),
                    c: unit,
                    d: c.clone(),
                }),
            )?;
            let mut r = Pasting::new(start);
            r.apply(
                inst,
                0,
                0,
                hat_tensor_right(
                    inst,
                    &TwoCellExpr::gen(Cell::Rho {
                        a: a.clone(),
                        b: b.clone(),
                    }),
                    c,
                )?,
            )?;
            r.apply(
                inst,
                0,
                0,
                TwoCellExpr::gen(Cell::Mu {
                    a: ab,
                    b: c.clone(),
                }),
            )?;
            Ok(done(id, t, l, r))
        }
        (ConditionId::CorRId, tag) => {
            let a = &t.objs[0];
            let start = s.id_path(a);
            let mut l = Pasting::new(start.clone());
            let cell = if tag == "right" {
                Cell::RUnit { f: start.clone() }
            } else {
                Cell::LUnit { f: start.clone() }
            };
            l.apply(inst, 0, 0, TwoCellExpr::gen(cell))?;
            let r = Pasting::new(start);
            Ok(done(id, t, l, r))
        }
        (ConditionId::CorAlphaId, tag) => {
            let [a, b, c] = match t.objs.as_slice() {
                [a, b, c] => [a, b, c],
                _ => return Err(Error::validation("tuple", "bad arity")),
            };
            let ab = s.obj_tensor(a, b)?;
            let bc = s.obj_tensor(b, c)?;
            let x = s.obj_tensor(&ab, c)?;
            let start = s.id_path(&x);
            match tag {
                "slot1" => {
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        0,
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: s.id_path(a),
                            b: b.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    let r = Pasting::new(start);
                    Ok(done(id, t, l, r))
                }
                "slot2" => {
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        0,
                        TwoCellExpr::gen(Cell::Alpha2 {
                            a: a.clone(),
                            g: s.id_path(b),
                            c: c.clone(),
                        }),
                    )?;
                    let r = Pasting::new(start);
                    Ok(done(id, t, l, r))
                }
                "slot3" => {
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        0,
                        TwoCellExpr::gen(Cell::Alpha3 {
                            a: a.clone(),
                            b: b.clone(),
                            h: s.id_path(c),
                        }),
                    )?;
                    let r = Pasting::new(start);
                    Ok(done(id, t, l, r))
                }
                _ => {
                    // Route comparison: the associator at identities equals
                    // the composite of unit tensorators along either
                    // bracketing, both of which are pinned to the identity.
                    let beta = TwoCellExpr::vcomp(
                        TwoCellExpr::tensor(
                            tensorator_unit(a.clone(), b.clone()),
                            TwoCellExpr::identity(s.id_path(c)),
                        ),
                        tensorator_unit(ab.clone(), c.clone()),
                    );
                    let gamma = TwoCellExpr::vcomp(
                        TwoCellExpr::tensor(
                            TwoCellExpr::identity(s.id_path(a)),
                            tensorator_unit(b.clone(), c.clone()),
                        ),
                        tensorator_unit(a.clone(), bc.clone()),
                    );
                    let mut l = Pasting::new(start.clone());
                    l.apply(
                        inst,
                        0,
                        0,
                        TwoCellExpr::gen(Cell::Alpha1 {
                            f: s.id_path(a),
                            b: b.clone(),
                            c: c.clone(),
                        }),
                    )?;
                    let mut r = Pasting::new(start);
                    r.apply(inst, 0, 0, TwoCellExpr::inverse(beta))?;
                    r.apply(inst, 0, 0, gamma)?;
                    Ok(done(id, t, l, r))
                }
            }
        }
        _ => Err(Error::validation(
            "tuple",
            format!("unknown tag `{}` for {}", t.tag, id),
        )),
    }
}
