//! Shipped model families: strict free instances, scalar skeletal instances
//! backed by a group 4-cochain, and a small tabulated family with ambient
//! 2-cells for exercising every condition.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cell::{Cell, Gen1Id, ObjId, OneCellPath};
use crate::cocycle::{Cochain4, CyclicProduct};
use crate::error::{Error, Result};
use crate::group::{Elem, ValueGroup};
use crate::instance::{AmbientCell, Instance, ModelKind, ScalarMeta, Structure};
use crate::sig::Signature;

/// A strict instance: objects are words over `n` letters truncated to length
/// `cap`, tensor is concatenation, and one endo generator 1-cell sits at
/// every object. The value alphabet is trivial, so every condition holds.
pub fn strict_instance(n: usize, cap: usize) -> Result<Instance> {
    if n == 0 || n > 26 || cap == 0 {
        return Err(Error::validation("strict", "need 1..=26 letters and cap >= 1"));
    }
    let letters: Vec<char> = (0..n).map(|i| (b'a' + i as u8) as char).collect();
    let mut words: Vec<String> = vec![String::new()];
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &words {
            for l in &letters {
                let mut v = w.clone();
                v.push(*l);
                if !words.contains(&v) && !next.contains(&v) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        words.extend(next);
    }
    words.sort();
    let obj_name = |w: &str| {
        if w.is_empty() {
            "I".to_string()
        } else {
            w.to_string()
        }
    };
    let trunc = |a: &str, b: &str| {
        let mut w = String::from(a);
        w.push_str(b);
        w.truncate(cap);
        w
    };
    let mut sig = Signature {
        objects: words.iter().map(|w| ObjId(obj_name(w))).collect(),
        unit: ObjId("I".into()),
        ..Default::default()
    };
    for a in &words {
        for b in &words {
            sig.obj_tensor.insert(
                (ObjId(obj_name(a)), ObjId(obj_name(b))),
                ObjId(obj_name(&trunc(a, b))),
            );
        }
    }
    let gen_name = |w: &str| format!("e_{}", obj_name(w));
    for w in &words {
        let o = ObjId(obj_name(w));
        sig.gens.insert(Gen1Id(gen_name(w)), (o.clone(), o));
    }
    for a in &words {
        for b in &words {
            let ab = trunc(a, b);
            sig.tensor_gg.insert(
                (Gen1Id(gen_name(a)), Gen1Id(gen_name(b))),
                Gen1Id(gen_name(&ab)),
            );
            sig.tensor_go.insert(
                (Gen1Id(gen_name(a)), ObjId(obj_name(b))),
                Gen1Id(gen_name(&ab)),
            );
            sig.tensor_og.insert(
                (ObjId(obj_name(a)), Gen1Id(gen_name(b))),
                Gen1Id(gen_name(&ab)),
            );
        }
    }
    let values = ValueGroup::Cyclic { moduli: vec![1] };
    let mut ambient = BTreeMap::new();
    for w in &words {
        let p = OneCellPath {
            src: ObjId(obj_name(w)),
            tgt: ObjId(obj_name(w)),
            gens: vec![Gen1Id(gen_name(w))],
        };
        ambient.insert(
            format!("g_{}", obj_name(w)),
            AmbientCell {
                src: p.clone(),
                tgt: p,
                value: values.zero(),
            },
        );
    }
    let inst = Instance {
        kind: ModelKind::Tabulated,
        sig,
        values,
        ambient,
        structure: Structure::default(),
        scalar: None,
    };
    inst.validate()?;
    Ok(inst)
}

/// Data of a scalar skeletal instance: one object per element of `g`, no
/// generating 1-cells, values in `k`, with the pentagonator given by a
/// 4-cochain and the 2-unitors by tables over pairs.
#[derive(Clone, Debug)]
pub struct ScalarSpec {
    pub g: CyclicProduct,
    pub k: CyclicProduct,
    pub omega: Cochain4,
    /// 2-unitor values over pairs of elements, dense `n * n` tables of
    /// coefficient indices.
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub rho: Vec<u32>,
}

impl ScalarSpec {
    pub fn with_omega(g: CyclicProduct, k: CyclicProduct, omega: Cochain4) -> Self {
        let n = g.order();
        ScalarSpec {
            g,
            k,
            omega,
            lambda: vec![0; n * n],
            mu: vec![0; n * n],
            rho: vec![0; n * n],
        }
    }
}

/// Object name of a group element in a scalar instance.
pub fn scalar_obj_name(g: &CyclicProduct, i: usize) -> String {
    g.residues(i)
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("_")
}

/// Build the scalar instance over `spec`.
pub fn scalar_instance(spec: &ScalarSpec) -> Result<Instance> {
    let n = spec.g.order();
    if spec.omega.values.len() != n.pow(4) {
        return Err(Error::validation("omega", "wrong cochain size"));
    }
    for tab in [&spec.lambda, &spec.mu, &spec.rho] {
        if tab.len() != n * n {
            return Err(Error::validation("unitors", "wrong table size"));
        }
    }
    let name = |i: usize| ObjId(scalar_obj_name(&spec.g, i));
    let mut sig = Signature {
        objects: (0..n).map(name).collect(),
        unit: name(spec.g.identity()),
        ..Default::default()
    };
    for i in 0..n {
        for j in 0..n {
            sig.obj_tensor
                .insert((name(i), name(j)), name(spec.g.mul(i, j)));
        }
    }
    let values = ValueGroup::Cyclic {
        moduli: spec.k.moduli.clone(),
    };
    let kval = |v: u32| -> Result<Elem> {
        if (v as usize) >= spec.k.order() {
            return Err(Error::validation("omega", format!("value {v} outside coefficients")));
        }
        Ok(Elem::Z(spec.k.residues(v as usize)))
    };
    let mut structure = Structure::default();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let v = spec.omega.at(&spec.g, a, b, c, d);
                    if v != 0 {
                        structure.set(
                            &Cell::Pi {
                                a: name(a),
                                b: name(b),
                                c: name(c),
                                d: name(d),
                            },
                            kval(v)?,
                        );
                    }
                }
            }
            for (tab, make) in [
                (&spec.lambda, 0),
                (&spec.mu, 1),
                (&spec.rho, 2),
            ] {
                let v = tab[a * n + b];
                if v != 0 {
                    let cell = match make {
                        0 => Cell::Lambda { a: name(a), b: name(b) },
                        1 => Cell::Mu { a: name(a), b: name(b) },
                        _ => Cell::Rho { a: name(a), b: name(b) },
                    };
                    structure.set(&cell, kval(v)?);
                }
            }
        }
    }
    let inst = Instance {
        kind: ModelKind::Scalar,
        sig,
        values,
        ambient: BTreeMap::new(),
        structure,
        scalar: Some(ScalarMeta {
            g_moduli: spec.g.moduli.clone(),
        }),
    };
    inst.validate()?;
    Ok(inst)
}

fn bit(s: usize) -> String {
    (s % 2).to_string()
}

/// Signature of the small tabulated family: objects are Z/2, and for every
/// source, target and level in Z/2 there is one generator `f{a}{b}{h}`;
/// tensors add componentwise.
fn family_signature() -> Signature {
    let obj = |a: usize| ObjId(bit(a));
    let gen = |a: usize, b: usize, h: usize| Gen1Id(format!("f{}{}{}", a % 2, b % 2, h % 2));
    let mut sig = Signature {
        objects: vec![obj(0), obj(1)],
        unit: obj(0),
        ..Default::default()
    };
    for a in 0..2 {
        for b in 0..2 {
            sig.obj_tensor.insert((obj(a), obj(b)), obj(a + b));
        }
    }
    for a in 0..2 {
        for b in 0..2 {
            for h in 0..2 {
                sig.gens.insert(gen(a, b, h), (obj(a), obj(b)));
            }
        }
    }
    for a in 0..2 {
        for b in 0..2 {
            for h in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        for k in 0..2 {
                            sig.tensor_gg.insert(
                                (gen(a, b, h), gen(c, d, k)),
                                gen(a + c, b + d, h + k),
                            );
                        }
                    }
                    sig.tensor_go
                        .insert((gen(a, b, h), obj(c)), gen(a + c, b + c, h));
                    sig.tensor_og
                        .insert((obj(c), gen(a, b, h)), gen(c + a, c + b, h));
                }
            }
        }
    }
    sig
}

/// The coherent zero-valued tabulated instance of the family: all structure
/// and ambient cells evaluate to the identity of Z/8.
pub fn tabulated_zero() -> Result<Instance> {
    let sig = family_signature();
    let values = ValueGroup::Cyclic { moduli: vec![8] };
    let mut ambient = BTreeMap::new();
    for a in 0..2usize {
        for b in 0..2usize {
            let path = |h: usize| OneCellPath {
                src: ObjId(bit(a)),
                tgt: ObjId(bit(b)),
                gens: vec![Gen1Id(format!("f{a}{b}{h}"))],
            };
            ambient.insert(
                format!("g{a}{b}"),
                AmbientCell {
                    src: path(0),
                    tgt: path(1),
                    value: values.zero(),
                },
            );
            ambient.insert(
                format!("e{a}{b}"),
                AmbientCell {
                    src: path(0),
                    tgt: path(0),
                    value: values.zero(),
                },
            );
        }
    }
    let inst = Instance {
        kind: ModelKind::Tabulated,
        sig,
        values,
        ambient,
        structure: Structure::default(),
        scalar: None,
    };
    inst.validate()?;
    Ok(inst)
}

/// Every structure cell the family can address: tensorators over composable
/// generator pairs and whisker shapes, associators, unitors, pentagonators
/// and 2-unitors. Used for randomization and perturbation sampling.
pub fn family_structure_cells(inst: &Instance) -> Result<Vec<Cell>> {
    let s = &inst.sig;
    let mut gens: Vec<OneCellPath> = Vec::new();
    for g in s.gens.keys() {
        gens.push(s.gen_path(g)?);
    }
    let objects = s.objects.clone();
    let mut out = Vec::new();
    // Tensorators over composable pairs of generator pairs.
    for f0 in &gens {
        for f1 in &gens {
            if f0.tgt != f1.src {
                continue;
            }
            for g0 in &gens {
                for g1 in &gens {
                    if g0.tgt != g1.src {
                        continue;
                    }
                    out.push(Cell::Phi {
                        f1: f1.clone(),
                        g1: g1.clone(),
                        f0: f0.clone(),
                        g0: g0.clone(),
                    });
                }
            }
        }
    }
    // Whisker compatibility and exchange shapes.
    for f0 in &gens {
        for f1 in &gens {
            if f0.tgt != f1.src {
                continue;
            }
            for b in &objects {
                let id_b = s.id_path(b);
                out.push(Cell::Phi {
                    f1: f1.clone(),
                    g1: id_b.clone(),
                    f0: f0.clone(),
                    g0: id_b.clone(),
                });
                out.push(Cell::Phi {
                    f1: id_b.clone(),
                    g1: f1.clone(),
                    f0: id_b.clone(),
                    g0: f0.clone(),
                });
            }
        }
    }
    for f in &gens {
        for g in &gens {
            out.push(Cell::Phi {
                f1: f.clone(),
                g1: s.id_path(&g.tgt),
                f0: s.id_path(&f.src),
                g0: g.clone(),
            });
            out.push(Cell::Phi {
                f1: s.id_path(&f.tgt),
                g1: g.clone(),
                f0: f.clone(),
                g0: s.id_path(&g.src),
            });
        }
    }
    // Associators, unitors.
    for f in &gens {
        for x in &objects {
            for y in &objects {
                out.push(Cell::Alpha1 {
                    f: f.clone(),
                    b: x.clone(),
                    c: y.clone(),
                });
                out.push(Cell::Alpha2 {
                    a: x.clone(),
                    g: f.clone(),
                    c: y.clone(),
                });
                out.push(Cell::Alpha3 {
                    a: x.clone(),
                    b: y.clone(),
                    h: f.clone(),
                });
            }
        }
        out.push(Cell::LUnit { f: f.clone() });
        out.push(Cell::RUnit { f: f.clone() });
    }
    // Pentagonators and 2-unitors.
    for a in &objects {
        for b in &objects {
            for c in &objects {
                for d in &objects {
                    out.push(Cell::Pi {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                        d: d.clone(),
                    });
                }
            }
            out.push(Cell::Lambda {
                a: a.clone(),
                b: b.clone(),
            });
            out.push(Cell::Mu {
                a: a.clone(),
                b: b.clone(),
            });
            out.push(Cell::Rho {
                a: a.clone(),
                b: b.clone(),
            });
        }
    }
    out.sort_by_key(|c| c.key());
    out.dedup();
    Ok(out)
}

/// A randomized (generally incoherent) instance of the family: ambient and
/// structure cells get pseudo-random values drawn from the given seed.
pub fn tabulated_random(seed: u64) -> Result<Instance> {
    let mut inst = tabulated_zero()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = inst.ambient.keys().cloned().collect();
    for n in names {
        let v = Elem::Z(vec![rng.gen_range(0..8)]);
        inst.ambient.get_mut(&n).unwrap().value = v;
    }
    for cell in family_structure_cells(&inst)? {
        let v: u32 = rng.gen_range(0..8);
        if v != 0 {
            inst.structure.set(&cell, Elem::Z(vec![v]));
        }
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_instance_has_expected_objects() {
        let inst = strict_instance(3, 2).unwrap();
        // Empty word, 3 letters, 9 two-letter words.
        assert_eq!(inst.sig.objects.len(), 13);
        assert!(inst.sig.has_object(&ObjId("I".into())));
        assert!(inst.sig.has_object(&ObjId("ab".into())));
        inst.validate().unwrap();
    }

    #[test]
    fn scalar_instance_round_trips_omega() {
        let g = CyclicProduct::new(vec![2]).unwrap();
        let k = CyclicProduct::new(vec![2]).unwrap();
        let mut omega = Cochain4::zero(&g);
        omega.set(&g, 1, 1, 1, 1, 1);
        let inst = scalar_instance(&ScalarSpec::with_omega(g, k, omega)).unwrap();
        let one = ObjId("1".into());
        let pi = Cell::Pi {
            a: one.clone(),
            b: one.clone(),
            c: one.clone(),
            d: one,
        };
        assert_eq!(inst.cell_value(&pi).unwrap(), Elem::Z(vec![1]));
    }

    #[test]
    fn family_cells_resolve() {
        let inst = tabulated_zero().unwrap();
        for cell in family_structure_cells(&inst).unwrap() {
            inst.cell_boundary(&cell).unwrap();
        }
    }

    #[test]
    fn random_instances_are_deterministic_per_seed() {
        let a = tabulated_random(7).unwrap();
        let b = tabulated_random(7).unwrap();
        assert_eq!(a.structure.table, b.structure.table);
        let c = tabulated_random(8).unwrap();
        assert_ne!(a.structure.table, c.structure.table);
    }
}
