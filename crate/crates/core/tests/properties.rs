mod common;

use std::sync::OnceLock;

use lattix::corpus::{enumerate_lattices, random_dismantlable};
use lattix::predicates::{dismantling_sequence, is_rank_connected};
use lattix::shelling::{construct_el, rising_chains, verify_el, EdgeLabeling, ElViolation, Label};
use lattix::{canonical_form, delete_elements, Lattice};
use proptest::prelude::*;
use proptest::sample::Index;

fn corpus(max: usize) -> Vec<Lattice> {
    (1..=max).flat_map(|n| enumerate_lattices(n).unwrap()).collect()
}

fn corpus8() -> &'static [Lattice] {
    static CORPUS: OnceLock<Vec<Lattice>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus(8))
}

#[test]
fn meets_and_joins_are_bounds() {
    for l in corpus(9) {
        for x in l.elements() {
            for y in l.elements() {
                let (m, j) = (l.meet(x, y), l.join(x, y));
                assert!(l.leq(m, x) && l.leq(m, y) && l.leq(x, j) && l.leq(y, j));
                for z in l.elements() {
                    if l.leq(z, x) && l.leq(z, y) {
                        assert!(l.leq(z, m));
                    }
                    if l.leq(x, z) && l.leq(y, z) {
                        assert!(l.leq(j, z));
                    }
                }
            }
        }
    }
}

#[test]
fn ranks_rise_by_one_along_covers() {
    for l in corpus(8) {
        let upper: Vec<Vec<usize>> = l.elements().map(|x| l.upper_covers(x).to_vec()).collect();
        let lengths: Vec<usize> = common::maximal_chains(&upper, l.bottom(), l.top())
            .iter()
            .map(|c| c.len())
            .collect();
        let ranked = lengths.iter().all(|&k| k == lengths[0]);
        assert_eq!(l.is_ranked(), ranked, "{l:?}");
        if let Ok(r) = l.rank_function() {
            assert_eq!(r.rank(l.bottom()), 0);
            assert!(l.covers().iter().all(|&(a, b)| r.rank(b) == r.rank(a) + 1));
        }
    }
}

#[test]
fn intervals_are_lattices() {
    for l in corpus(8) {
        for x in l.elements() {
            for y in l.up_set(x).ones() {
                let view = l.interval(x, y).unwrap();
                let sub = view.to_lattice().unwrap();
                assert_eq!(sub.lattice.len(), view.members().len());
            }
        }
    }
}

#[test]
fn construct_el_on_nine_element_corpus() {
    for l in enumerate_lattices(9).unwrap() {
        if is_rank_connected(&l).holds() && dismantling_sequence(&l).holds() {
            let f = construct_el(&l).unwrap();
            assert!(verify_el(&l, &f).unwrap().ok);
        }
    }
}

fn transitive_closure(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut rel = vec![vec![false; n]; n];
    for &(a, b) in covers {
        rel[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    rel
}

fn shuffled(l: &Lattice, keys: &[u64]) -> Lattice {
    let mut order: Vec<usize> = l.elements().collect();
    order.sort_by_key(|&e| (keys[e], e));
    let mut perm = vec![0; l.len()];
    for (position, &e) in order.iter().enumerate() {
        perm[e] = position;
    }
    l.relabel(&perm).unwrap()
}

proptest! {
    #[test]
    fn deletion_preserves_order(pick in any::<Index>(), mask in any::<u16>()) {
        let l = pick.get(corpus8());
        let removed: Vec<usize> = l
            .elements()
            .filter(|&e| e != l.bottom() && e != l.top() && mask >> e & 1 == 1)
            .collect();
        let deletion = delete_elements(l, &removed);
        let closure = transitive_closure(l.len(), &deletion.covers);
        for &a in &deletion.survivors {
            for &b in &deletion.survivors {
                prop_assert_eq!(closure[a][b], l.lt(a, b));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(
        n in 2usize..16,
        seed in any::<u64>(),
        keys in proptest::collection::vec(any::<u64>(), 16),
    ) {
        let (l, _) = random_dismantlable(n, seed);
        prop_assert_eq!(canonical_form(&shuffled(&l, &keys)), canonical_form(&l));
    }

    #[test]
    fn verdict_survives_monotone_relabeling(
        pick in any::<Index>(),
        raw in proptest::collection::vec(0i64..4, 32),
        steps in proptest::collection::vec(1i64..7, 4),
        offset in -5i64..5,
    ) {
        let ranked: Vec<&Lattice> = corpus8().iter().filter(|l| l.is_ranked()).collect();
        let l = *pick.get(&ranked);
        let f: EdgeLabeling = l
            .covers()
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, Label::from_integer(raw[i % raw.len()])))
            .collect();
        // strictly increasing on 0..4
        let g = f.map_labels(|v| {
            let k = *v.numer() as usize;
            Label::new(steps[..k].iter().sum::<i64>() + offset, 3)
        });
        let (a, b) = (verify_el(l, &f).unwrap(), verify_el(l, &g).unwrap());
        prop_assert_eq!(&a, &b);
        if let Some(violation) = &a.violation {
            prop_assert!(violation.replay(l, &f).is_ok());
            if let ElViolation::MultipleRisingChains { x, y, first, second } = violation {
                let chains = rising_chains(l, &f, *x, *y).unwrap();
                prop_assert!(chains.contains(first) && chains.contains(second));
            }
        }
    }
}
