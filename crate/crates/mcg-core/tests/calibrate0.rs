//! Throwaway calibration search for the foot-home twist formula.

use mcg_core::autrep::{nielsen_inverse, Automorphism};
use mcg_core::twists;
use mcg_core::word::Word;
use mcg_core::Signature;

/// rotation words built from the foot letter (b or m) and the puncture block
fn rots(sig: &Signature, m: u32) -> Vec<(String, Word)> {
    let g = sig.genus();
    let mw = sig.foot_word(g);
    let bw = Word::gen(sig.b(g));
    let mut u = Word::empty();
    for t in 1..=m {
        u.extend_reduced(&Word::gen(sig.u(t)));
    }
    let mut out = Vec::new();
    for (fname, f) in [("b", bw), ("m", mw)] {
        for (order, w) in [("fu", f.concat(&u)), ("uf", u.concat(&f))] {
            out.push((format!("{}{}+", fname, order), w.clone()));
            out.push((format!("{}{}-", fname, order), w.invert()));
        }
    }
    out
}

struct Cand {
    uc: usize,
    bc: usize,
    /// prefix of the a image: 0 = none, else 1 + index into pairs of
    /// distinct rotations multiplied together
    ap: usize,
    at: usize, // 0 = none, else 1 + rotation index
}

fn prefix_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y {
                v.push((x, y));
            }
        }
    }
    v
}

fn images(sig: &Signature, m: u32, c: &Cand) -> Vec<Word> {
    let g = sig.genus();
    let r = rots(sig, m);
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    images[sig.b(g) as usize] = Word::gen(sig.b(g)).conjugate(&r[c.bc].1);
    for t in 1..=m {
        images[sig.u(t) as usize] = Word::gen(sig.u(t)).conjugate(&r[c.uc].1);
    }
    let mut a = Word::empty();
    if c.ap > 0 {
        let (x, y) = prefix_pairs(r.len())[c.ap - 1];
        a.extend_reduced(&r[x].1);
        a.extend_reduced(&r[y].1);
    }
    a.extend_reduced(&Word::gen(sig.a(g)));
    if c.at > 0 {
        a.extend_reduced(&r[c.at - 1].1);
    }
    images[sig.a(g) as usize] = a;
    images
}

fn label(sig: &Signature, c: &Cand) -> String {
    let r = rots(sig, 1);
    let ap = if c.ap == 0 {
        "-".to_string()
    } else {
        let (x, y) = prefix_pairs(r.len())[c.ap - 1];
        format!("{}*{}", r[x].0, r[y].0)
    };
    format!(
        "u:{} b:{} ap:{} at:{}",
        r[c.uc].0,
        r[c.bc].0,
        ap,
        if c.at == 0 { "-".into() } else { r[c.at - 1].0.clone() },
    )
}

#[test]
fn search_foot_home() {
    let sig11 = Signature::new(1, 1).unwrap();
    let sig12 = Signature::new(1, 2).unwrap();
    let nrots = rots(&sig11, 1).len();
    let mut stage_counts = [0usize; 6];
    let mut reached_relations = Vec::new();
    let mut survivors = Vec::new();
    let tau11 = twists::meridian_twist(&sig11, 1, 1);
    let npairs = prefix_pairs(nrots).len();
    for uc in 0..nrots {
        for bc in 0..nrots {
            for ap in 0..=npairs {
                for at in 0..=nrots {
                    let c = Cand { uc, bc, ap, at };
                    // homology of the a image must gain exactly +-(b+u)
                    let imgs = images(&sig11, 1, &c);
                    let ab = imgs[0].abelianize(3); // image of a at (1,1): [a,b,u]
                    if ab[0] != 1 || ab[1] != ab[2] || ab[1].abs() != 1 {
                        continue;
                    }
                    stage_counts[0] += 1;
                    let raw = Automorphism::raw(&sig11, imgs.clone());
                    if !raw.is_mapping_class() {
                        continue;
                    }
                    stage_counts[1] += 1;
                    if raw.compose(&tau11).outer_equal(&tau11.compose(&raw)).is_none() {
                        continue;
                    }
                    stage_counts[2] += 1;
                    let Some(inv) = nielsen_inverse(&sig11, &imgs) else { continue };
                    let xi = Automorphism::basic(&sig11, imgs, inv, "cand", 1);
                    stage_counts[3] += 1;
                    reached_relations.push(label(&sig11, &c));
                    for gather in [1i64, -1] {
                        let h1 = twists::braid_half_twist(&sig11, 1, gather);
                        let zeta = h1.compose(&xi).compose(&h1.invert().unwrap());
                        let iota = twists::braid_half_twist(&sig11, 1, 1);
                        let rhs = iota.invert().unwrap().compose(&xi).compose(&iota);
                        if zeta.outer_equal(&rhs).is_none() {
                            continue;
                        }
                        let s11 =
                            twists::enclosing_twist(&sig11, &mcg_core::surface::sets::pair(1), 1);
                        let m_opts: Vec<(usize, Automorphism)> = vec![
                            (0, xi.invert().unwrap().compose(&zeta)),
                            (1, zeta.invert().unwrap().compose(&xi)),
                            (2, zeta.compose(&xi.invert().unwrap())),
                            (3, xi.compose(&zeta.invert().unwrap())),
                        ];
                        for (mdef, m_cand) in m_opts {
                            let mut r7 = None;
                            'r7: for tpow in [-2i64, 2] {
                                for sexp in [1i64, -1] {
                                    for order in 0..2 {
                                        let prod = if order == 0 {
                                            zeta.compose(&xi)
                                        } else {
                                            xi.compose(&zeta)
                                        };
                                        let rhs = tau11
                                            .pow(tpow)
                                            .unwrap()
                                            .compose(&prod)
                                            .compose(&s11.pow(sexp).unwrap());
                                        if m_cand.outer_equal(&rhs).is_some() {
                                            r7 = Some((tpow, sexp, order));
                                            break 'r7;
                                        }
                                    }
                                }
                            }
                            let Some(r7hit) = r7 else { continue };
                            stage_counts[4] += 1;
                            // R15 at (1,2): slide along f1*l1 vs zeta xi mod tau
                            let i2 = images(&sig12, 1, &c);
                            let Some(v2) = nielsen_inverse(&sig12, &i2) else { continue };
                            let xi2 = Automorphism::basic(&sig12, i2, v2, "cand", 1);
                            if !xi2.is_mapping_class() {
                                continue;
                            }
                            let h1b = twists::braid_half_twist(&sig12, 1, gather);
                            let zeta2 = h1b.compose(&xi2).compose(&h1b.invert().unwrap());
                            let ig = images(&sig12, 2, &c);
                            let Some(vg) = nielsen_inverse(&sig12, &ig) else { continue };
                            let gp = Automorphism::basic(&sig12, ig, vg, "cand", 1);
                            let pair1 = twists::enclosing_twist(
                                &sig12,
                                &mcg_core::surface::sets::pair(1),
                                -1,
                            );
                            let slide = pair1.compose(&gp);
                            let tau2 = twists::meridian_twist(&sig12, 1, 1);
                            for order in 0..2 {
                                let rhs0 = if order == 0 {
                                    zeta2.compose(&xi2)
                                } else {
                                    xi2.compose(&zeta2)
                                };
                                for p in -4i64..=4 {
                                    if slide
                                        .outer_equal(&rhs0.compose(&tau2.pow(p).unwrap()))
                                        .is_some()
                                    {
                                        survivors.push((
                                            label(&sig11, &c),
                                            gather,
                                            mdef,
                                            r7hit,
                                            order,
                                            p,
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    eprintln!("stage counts: {:?}", stage_counts);
    eprintln!("reached relation stage: {:?}", reached_relations);
    eprintln!("SURVIVORS (label, gather, mdef, r7(tpow,sexp,order), r15order, taupow):");
    for s in &survivors {
        eprintln!("  {:?}", s);
    }
    assert!(!survivors.is_empty(), "no candidate passed the battery");
}
