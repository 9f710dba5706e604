//! Object and 1-cell signature: the generating data below dimension two.

use std::collections::BTreeMap;

use crate::cell::{Gen1Id, ObjId, OneCellPath};
use crate::error::{Error, Result};

/// Declared objects and generating 1-cells together with all tensor tables
/// needed to form whiskers and tensors of paths.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    pub objects: Vec<ObjId>,
    pub unit: ObjId,
    /// Tensor of objects; required total and strictly associative and unital
    /// because the shipped models take the 1-cell parts of `a`, `l`, `r` to
    /// be identities.
    pub obj_tensor: BTreeMap<(ObjId, ObjId), ObjId>,
    /// Generating 1-cells with their endpoints.
    pub gens: BTreeMap<Gen1Id, (ObjId, ObjId)>,
    /// Tensor of two generating 1-cells.
    pub tensor_gg: BTreeMap<(Gen1Id, Gen1Id), Gen1Id>,
    /// Right whisker of a generator by an object.
    pub tensor_go: BTreeMap<(Gen1Id, ObjId), Gen1Id>,
    /// Left whisker of an object by a generator.
    pub tensor_og: BTreeMap<(ObjId, Gen1Id), Gen1Id>,
}

impl Signature {
    pub fn has_object(&self, a: &ObjId) -> bool {
        self.objects.contains(a)
    }

    pub fn gen_src(&self, g: &Gen1Id) -> Result<&ObjId> {
        self.gens
            .get(g)
            .map(|(s, _)| s)
            .ok_or_else(|| Error::UnknownGenerator(g.0.clone()))
    }

    pub fn gen_tgt(&self, g: &Gen1Id) -> Result<&ObjId> {
        self.gens
            .get(g)
            .map(|(_, t)| t)
            .ok_or_else(|| Error::UnknownGenerator(g.0.clone()))
    }

    pub fn obj_tensor(&self, a: &ObjId, b: &ObjId) -> Result<ObjId> {
        self.obj_tensor
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTableEntry(format!("object tensor {a} (x) {b}")))
    }

    pub fn id_path(&self, a: &ObjId) -> OneCellPath {
        OneCellPath::identity(a)
    }

    /// Path from an explicit source object and generator sequence, validating
    /// head-to-tail composability.
    pub fn path(&self, src: &ObjId, gens: &[Gen1Id]) -> Result<OneCellPath> {
        let mut at = src.clone();
        for g in gens {
            let (s, t) = self
                .gens
                .get(g)
                .ok_or_else(|| Error::UnknownGenerator(g.0.clone()))?;
            if *s != at {
                return Err(Error::NonComposable(format!(
                    "generator {g} starts at {s}, path is at {at}"
                )));
            }
            at = t.clone();
        }
        Ok(OneCellPath {
            src: src.clone(),
            tgt: at,
            gens: gens.to_vec(),
        })
    }

    pub fn gen_path(&self, g: &Gen1Id) -> Result<OneCellPath> {
        let (s, t) = self
            .gens
            .get(g)
            .ok_or_else(|| Error::UnknownGenerator(g.0.clone()))?;
        Ok(OneCellPath {
            src: s.clone(),
            tgt: t.clone(),
            gens: vec![g.clone()],
        })
    }

    /// Horizontal composite of paths (concatenation), `p` applied first.
    pub fn compose(&self, p: &OneCellPath, q: &OneCellPath) -> Result<OneCellPath> {
        if p.tgt != q.src {
            return Err(Error::NonComposable(format!(
                "{} ends at {}, {} starts at {}",
                p, p.tgt, q, q.src
            )));
        }
        let mut gens = p.gens.clone();
        gens.extend(q.gens.iter().cloned());
        Ok(OneCellPath {
            src: p.src.clone(),
            tgt: q.tgt.clone(),
            gens,
        })
    }

    /// The object reached after the first `i` generators of `p`.
    pub fn object_at(&self, p: &OneCellPath, i: usize) -> Result<ObjId> {
        if i == 0 {
            return Ok(p.src.clone());
        }
        self.gen_tgt(&p.gens[i - 1]).cloned()
    }

    /// The sub-path of `p` covering generator positions `range`.
    pub fn sub_path(&self, p: &OneCellPath, start: usize, end: usize) -> Result<OneCellPath> {
        let src = self.object_at(p, start)?;
        let tgt = self.object_at(p, end)?;
        Ok(OneCellPath {
            src,
            tgt,
            gens: p.gens[start..end].to_vec(),
        })
    }

    fn gen_tensor_gg(&self, f: &Gen1Id, g: &Gen1Id) -> Result<Gen1Id> {
        self.tensor_gg
            .get(&(f.clone(), g.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTableEntry(format!("{f} (x) {g}")))
    }

    fn gen_tensor_go(&self, f: &Gen1Id, b: &ObjId) -> Result<Gen1Id> {
        self.tensor_go
            .get(&(f.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTableEntry(format!("{f} (x) {b}")))
    }

    fn gen_tensor_og(&self, a: &ObjId, g: &Gen1Id) -> Result<Gen1Id> {
        self.tensor_og
            .get(&(a.clone(), g.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTableEntry(format!("{a} (x) {g}")))
    }

    /// Componentwise tensor of paths. The shorter path is padded at its end
    /// with identities, i.e. trailing generators of the longer path are
    /// whiskered by the other path's target object.
    pub fn tensor_paths(&self, p: &OneCellPath, q: &OneCellPath) -> Result<OneCellPath> {
        let n = p.len().max(q.len());
        let mut gens = Vec::with_capacity(n);
        for i in 0..n {
            let g = match (p.gens.get(i), q.gens.get(i)) {
                (Some(f), Some(g)) => self.gen_tensor_gg(f, g)?,
                (Some(f), None) => self.gen_tensor_go(f, &q.tgt)?,
                (None, Some(g)) => self.gen_tensor_og(&p.tgt, g)?,
                (None, None) => unreachable!(),
            };
            gens.push(g);
        }
        Ok(OneCellPath {
            src: self.obj_tensor(&p.src, &q.src)?,
            tgt: self.obj_tensor(&p.tgt, &q.tgt)?,
            gens,
        })
    }

    pub fn whisker_l(&self, a: &ObjId, p: &OneCellPath) -> Result<OneCellPath> {
        self.tensor_paths(&self.id_path(a), p)
    }

    pub fn whisker_r(&self, p: &OneCellPath, b: &ObjId) -> Result<OneCellPath> {
        self.tensor_paths(p, &self.id_path(b))
    }

    /// Validate totality, associativity and unitality of the object tensor.
    pub fn validate_obj_tensor(&self) -> Result<()> {
        for a in &self.objects {
            for b in &self.objects {
                let ab = self.obj_tensor(a, b)?;
                if !self.has_object(&ab) {
                    return Err(Error::validation(
                        "objects.tensor",
                        format!("{a} (x) {b} = {ab} is not a declared object"),
                    ));
                }
            }
            if self.obj_tensor(&self.unit, a)? != *a || self.obj_tensor(a, &self.unit)? != *a {
                return Err(Error::validation(
                    "objects.tensor",
                    format!("unit is not strict at {a}"),
                ));
            }
        }
        for a in &self.objects {
            for b in &self.objects {
                for c in &self.objects {
                    let l = self.obj_tensor(&self.obj_tensor(a, b)?, c)?;
                    let r = self.obj_tensor(a, &self.obj_tensor(b, c)?)?;
                    if l != r {
                        return Err(Error::validation(
                            "objects.tensor",
                            format!("tensor not associative at ({a}, {b}, {c})"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(s: &str) -> ObjId {
        ObjId(s.to_string())
    }

    fn gen(s: &str) -> Gen1Id {
        Gen1Id(s.to_string())
    }

    /// Two objects I, A with A (x) A = A; generators f, g: A -> A.
    fn sig() -> Signature {
        let mut s = Signature {
            objects: vec![obj("I"), obj("A")],
            unit: obj("I"),
            ..Default::default()
        };
        for a in ["I", "A"] {
            for b in ["I", "A"] {
                let t = if a == "I" && b == "I" { "I" } else { "A" };
                s.obj_tensor.insert((obj(a), obj(b)), obj(t));
            }
        }
        for name in ["f", "g", "fg", "fA", "Af"] {
            s.gens.insert(gen(name), (obj("A"), obj("A")));
        }
        s.tensor_gg.insert((gen("f"), gen("g")), gen("fg"));
        s.tensor_go.insert((gen("f"), obj("A")), gen("fA"));
        s.tensor_og.insert((obj("A"), gen("f")), gen("Af"));
        s
    }

    #[test]
    fn compose_is_concatenation() {
        let s = sig();
        let f = s.gen_path(&gen("f")).unwrap();
        let g = s.gen_path(&gen("g")).unwrap();
        let fg = s.compose(&f, &g).unwrap();
        assert_eq!(fg.gens, vec![gen("f"), gen("g")]);
        let id = s.id_path(&obj("A"));
        assert_eq!(s.compose(&id, &f).unwrap(), f);
        assert_eq!(s.compose(&f, &id).unwrap(), f);
    }

    #[test]
    fn tensor_paths_pads_shorter_path_at_end() {
        let s = sig();
        let f = s.gen_path(&gen("f")).unwrap();
        let g = s.gen_path(&gen("g")).unwrap();
        let ff = s.compose(&f, &f).unwrap();
        // (f . f) tensor g = [f (x) g, f (x) A].
        let t = s.tensor_paths(&ff, &g).unwrap();
        assert_eq!(t.gens, vec![gen("fg"), gen("fA")]);
        // g tensor (f . f) pads on the left factor's target.
        let u = s.tensor_paths(&g, &ff).unwrap();
        assert_eq!(u.gens.len(), 2);
        assert_eq!(u.gens[1], gen("Af"));
    }

    #[test]
    fn whiskers_of_identity_paths_are_identities() {
        let s = sig();
        let id = s.id_path(&obj("A"));
        assert!(s.whisker_l(&obj("A"), &id).unwrap().is_identity());
        assert!(s.whisker_r(&id, &obj("I")).unwrap().is_identity());
    }

    #[test]
    fn missing_entry_is_reported() {
        let s = sig();
        let g = s.gen_path(&gen("g")).unwrap();
        let err = s.whisker_r(&g, &obj("A"));
        assert!(matches!(err, Err(Error::MissingTableEntry(_))));
    }

    #[test]
    fn object_tensor_laws_validate() {
        let s = sig();
        s.validate_obj_tensor().unwrap();
    }
}
