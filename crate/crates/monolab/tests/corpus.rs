//! Properties that must hold on every member of the built-in corpus.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use monolab::core::algebra::{LinForm, Rat, RatFunc1};
use monolab::core::lab::{self, Verdict};
use monolab::core::monodromy::lct;
use monolab::core::padic::{denef_zeta, good_prime_check};
use monolab::core::resolution::{resolve_germ, CurveSystem, Kind, ResolutionGraph, SncPoint};
use monolab::core::zeta::{component_residue, poles, zeta_motivic_local, zeta_top, zeta_top_multi, Locality, ZetaOptions};
use monolab::core::Error;
use monolab::corpus::{Entry, CORPUS};

struct Member {
    entry: &'static Entry,
    /// One label per factor.
    labelled: ResolutionGraph,
    /// The product as a single function.
    single: ResolutionGraph,
}

fn members() -> Vec<Member> {
    CORPUS
        .iter()
        .map(|entry| {
            let labelled = resolve_germ(&entry.labelled().unwrap()).unwrap();
            let single = resolve_germ(&CurveSystem::germ(entry.poly().unwrap())).unwrap();
            Member { entry, labelled, single }
        })
        .collect()
}

fn local() -> ZetaOptions {
    ZetaOptions::local()
}

fn ratio(g: &ResolutionGraph, id: usize) -> Option<Rat> {
    let n = g.total_n(id);
    (n > 0).then(|| Rat::new(i64::from(g.components[id].nu).into(), (n as i64).into()))
}

#[test]
fn corpus_shape() {
    assert!(CORPUS.len() >= 20);
    let names: BTreeSet<&str> = CORPUS.iter().map(|e| e.name).collect();
    assert_eq!(names.len(), CORPUS.len());
    let texts: BTreeSet<String> = CORPUS.iter().map(|e| e.text()).collect();
    for want in ["y^2-x^3", "y^2-x^5", "y^3-x^5", "y^3-x^7", "y^4-x^5", "(y^2-x^3)^2-x^6*y", "(y^2-x^3)^2"] {
        assert!(texts.contains(want), "{} missing", want);
    }
    assert!(CORPUS.iter().any(|e| e.factors.len() >= 2 && e.factors.iter().all(|f| f.0.contains('^'))));
    assert!(CORPUS.iter().filter(|e| e.factors.iter().all(|f| f.0.len() == 1)).count() >= 3);
}

#[test]
fn the_whole_suite_is_fast() {
    let start = Instant::now();
    for m in members() {
        lab::check_all(&m.single, Default::default()).unwrap();
    }
    assert!(start.elapsed() < Duration::from_secs(300));
}

#[test]
fn numerical_relations_and_inequalities() {
    for m in members() {
        let r = lab::check_numerical_relations(&m.single).unwrap();
        assert_ne!(r.verdict, Verdict::Fail, "{}: {:?}", m.entry.name, r);
        let has_exceptional = m.single.exceptional().next().is_some();
        assert_eq!(r.verdict == Verdict::Pass, has_exceptional, "{}", m.entry.name);
        assert!(lab::is_minimal(&m.single), "{}", m.entry.name);
    }
}

#[test]
fn residues_vanish_at_valence_at_most_two() {
    let mut checked = 0;
    for m in members() {
        let g = &m.single;
        for c in g.exceptional().filter(|c| g.valence(c.id) <= 2) {
            let shared = g.neighbors(c.id).into_iter().any(|j| ratio(g, j) == ratio(g, c.id));
            match component_residue(g, c.id) {
                Ok(r) => {
                    assert!(!shared);
                    assert_eq!(r, Rat::from_integer(0.into()), "{} E{}", m.entry.name, c.id);
                    checked += 1;
                }
                Err(Error::SharedRatio(_)) => assert!(shared, "{} E{}", m.entry.name, c.id),
                Err(e) => panic!("{} E{}: {}", m.entry.name, c.id, e),
            }
        }
    }
    assert!(checked >= 20, "only {} components checked", checked);
}

#[test]
fn poles_are_the_predicted_ones() {
    for m in members() {
        let g = &m.single;
        let z = zeta_top(g, &local()).unwrap();
        let r = lab::check_pole_determination(g, &z).unwrap();
        assert_ne!(r.verdict, Verdict::Fail, "{}: {:?}", m.entry.name, r);
        if !g.blowup_log.is_empty() {
            assert_eq!(r.verdict, Verdict::Pass, "{}", m.entry.name);
            let got: BTreeSet<Rat> = poles(&z, None).poles().into_iter().collect();
            assert_eq!(got, lab::predicted_poles(g), "{}", m.entry.name);
        }
    }
}

#[test]
fn minimal_locus() {
    for m in members().into_iter().filter(|m| !m.single.blowup_log.is_empty()) {
        let g = &m.single;
        let loc = lab::analyze_min_locus(g).unwrap();
        assert!(loc.connected, "{}", m.entry.name);
        assert!(loc.monotone, "{}", m.entry.name);
        assert!(loc.shape.is_some(), "{}", m.entry.name);
        assert_eq!(loc.value, lct(g, Locality::Local).unwrap().value, "{}", m.entry.name);
        let reduced = g.strict().all(|c| g.total_n(c.id) == 1);
        if reduced {
            let shape = loc.shape.unwrap().as_str();
            assert!(shape == "single-node-star" || shape == "chain-between-nodes", "{}: {}", m.entry.name, shape);
        }
        assert_eq!(lab::check_structure(g).unwrap().verdict, Verdict::Pass, "{}", m.entry.name);
    }
}

#[test]
fn order_two_poles() {
    let mut seen = 0;
    for m in members() {
        let g = &m.single;
        let z = zeta_top(g, &local()).unwrap();
        let high: Vec<_> = poles(&z, None).entries.into_iter().filter(|e| e.order >= 2).collect();
        assert!(high.len() <= 1, "{}", m.entry.name);
        if let Some(e) = high.first() {
            seen += 1;
            assert_eq!(e.order, 2, "{}", m.entry.name);
            assert_eq!(-e.pole.clone(), lct(g, Locality::Local).unwrap().value, "{}", m.entry.name);
            assert_eq!(e.pole.numer(), &(-1).into(), "{}: {}", m.entry.name, e.pole);
        }
    }
    assert!(seen >= 2, "the corpus should contain order-two poles");
}

#[test]
fn extra_blow_ups_do_not_change_the_zeta_function() {
    for m in members() {
        let g = &m.single;
        let z = zeta_top(g, &local()).unwrap();
        let mut at: Vec<SncPoint> = (0..g.edges.len()).map(SncPoint::Edge).collect();
        at.extend(g.components.iter().filter(|c| c.kind == Kind::Exceptional).map(|c| SncPoint::OnComponent(c.id)));
        if g.components.len() == 1 {
            at.push(SncPoint::OnComponent(0));
        }
        for p in at {
            let h = g.blow_up_snc_point(p).unwrap();
            assert_eq!(zeta_top(&h, &local()).unwrap(), z, "{} at {:?}", m.entry.name, p);
        }
    }
}

#[test]
fn multivariate_zeta_on_the_diagonal() {
    for m in members() {
        let (z, polar) = zeta_top_multi(&m.labelled, &local()).unwrap();
        let k = m.entry.factors.len();
        let diag = vec![LinForm::new(0, vec![1]); k];
        let z1 = RatFunc1::from_multi(z.substitute(&diag).unwrap()).unwrap().normalize();
        assert_eq!(z1, zeta_top(&m.single, &local()).unwrap(), "{}", m.entry.name);
        assert!(!polar.is_empty());
        assert!(polar.iter().all(|f| f.nvars() == k));
    }
}

#[test]
fn motivic_specializations() {
    for m in members() {
        let g = &m.single;
        let mz = zeta_motivic_local(g).unwrap();
        assert_eq!(mz.topological().unwrap(), zeta_top(g, &local()).unwrap(), "{}", m.entry.name);
        let mut good = 0;
        for p in [5u64, 7, 11, 13] {
            if !good_prime_check(g, p).is_good() {
                continue;
            }
            good += 1;
            let d = denef_zeta(g, p, Locality::Local).unwrap();
            let l = Rat::from_integer((p as i64).into());
            assert_eq!(mz.series_at(&l, 8).unwrap(), d.series(8).unwrap(), "{} at p = {}", m.entry.name, p);
        }
        assert!(good >= 2, "{}", m.entry.name);
    }
}

#[test]
fn monodromy_conjecture_on_every_member() {
    for m in members() {
        let r = lab::check_monodromy_conjecture(&m.single, Default::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", m.entry.name, r);
    }
}

#[test]
fn every_check_passes_or_is_inapplicable() {
    for m in members() {
        for r in lab::check_all(&m.single, Default::default()).unwrap() {
            assert!(r.passed(), "{}: {:?}", m.entry.name, r);
        }
    }
}
