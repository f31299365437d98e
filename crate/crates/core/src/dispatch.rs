//! Choosing a construction for an arbitrary instance and moving its
//! certificate onto the caller's vertex numbering.

use std::fmt;
use std::str::FromStr;

use crate::caterpillar::{caterpillar_isomorphism, pack_two_paths_caterpillar};
use crate::certificate::{validate_certificate, PackingCertificate};
use crate::drawing::EdgeLabel;
use crate::few_crossings::{pack_three_cycles, pack_three_paths};
use crate::graph::{
    classify_tree, feasibility_screen, GuestGraph, GuestKind, Screen, TreeClass, Vertex,
};
use crate::packing::PackError;
use crate::quadruple::pack_three_paths_matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    ThreePaths,
    ThreeCycles,
    PathsCaterpillar,
    PathsMatching,
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [
        Strategy::Auto,
        Strategy::ThreePaths,
        Strategy::ThreeCycles,
        Strategy::PathsCaterpillar,
        Strategy::PathsMatching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::ThreePaths => "three-paths",
            Strategy::ThreeCycles => "three-cycles",
            Strategy::PathsCaterpillar => "paths-caterpillar",
            Strategy::PathsMatching => "paths-matching",
        }
    }

    /// The instance family this strategy builds, on `n` vertices. Caterpillar
    /// instances need a shape, so they have no generated family.
    pub fn family(self, n: usize) -> Option<Vec<GuestGraph>> {
        match self {
            Strategy::ThreePaths => Some(vec![GuestGraph::path_on(n); 3]),
            Strategy::ThreeCycles => Some(vec![GuestGraph::cycle_on(n); 3]),
            Strategy::PathsMatching => {
                let mut v = vec![GuestGraph::path_on(n); 3];
                v.push(GuestGraph::matching_on(n));
                Some(v)
            }
            Strategy::Auto | Strategy::PathsCaterpillar => None,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown strategy {s:?}"))
    }
}

/// The strategy whose instance family matches the guest shapes, if any.
pub fn select_strategy(instance: &[GuestGraph]) -> Option<Strategy> {
    let count = |k| instance.iter().filter(|g| g.has_shape(k)).count();
    let paths = count(GuestKind::Path);
    match instance.len() {
        3 if paths == 3 => Some(Strategy::ThreePaths),
        3 if count(GuestKind::Cycle) == 3 => Some(Strategy::ThreeCycles),
        3 if paths == 2 && count(GuestKind::Tree) == 3 => Some(Strategy::PathsCaterpillar),
        4 if paths == 3 && count(GuestKind::Matching) == 1 => Some(Strategy::PathsMatching),
        _ => None,
    }
}

/// Packs `instance` with the given strategy. The certificate carries the
/// caller's guests in the caller's order and numbering.
pub fn pack_instance(
    instance: &[GuestGraph],
    strategy: Strategy,
) -> Result<PackingCertificate, PackError> {
    match feasibility_screen(instance) {
        Err(e) => return Err(PackError::Unsupported(e.to_string())),
        Ok(Screen::Fail(f)) => return Err(PackError::no_packing(f.code(), f.to_string())),
        Ok(Screen::Pass) => {}
    }
    let strategy = match strategy {
        Strategy::Auto => select_strategy(instance).ok_or_else(|| {
            PackError::Unsupported(
                "no construction for this combination of guest shapes".to_string(),
            )
        })?,
        s => s,
    };
    let n = instance[0].n();
    let built = match strategy {
        Strategy::ThreePaths => pack_three_paths(n)?,
        Strategy::ThreeCycles => pack_three_cycles(n)?,
        Strategy::PathsMatching => pack_three_paths_matching(n)?,
        Strategy::PathsCaterpillar => {
            let t = instance
                .iter()
                .find(|g| !g.has_shape(GuestKind::Path))
                .unwrap_or(&instance[2]);
            pack_two_paths_caterpillar(t)?
        }
        Strategy::Auto => unreachable!(),
    };
    adopt(&built, instance).ok_or_else(|| {
        PackError::Unsupported(format!("the guests do not fit the {strategy} construction"))
    })
}

/// An isomorphism from `from` onto `to` for the guest shapes handled here.
pub fn guest_isomorphism(from: &GuestGraph, to: &GuestGraph) -> Option<Vec<Vertex>> {
    if from.n() != to.n() || from.edges().len() != to.edges().len() {
        return None;
    }
    let along = |a: Vec<Vertex>, b: Vec<Vertex>| {
        let mut map = vec![0; a.len()];
        for (x, y) in a.into_iter().zip(b) {
            map[x] = y;
        }
        map
    };
    if from.has_shape(GuestKind::Path) && to.has_shape(GuestKind::Path) {
        return Some(along(from.path_order()?, to.path_order()?));
    }
    if from.has_shape(GuestKind::Cycle) && to.has_shape(GuestKind::Cycle) {
        return Some(along(from.cycle_order()?, to.cycle_order()?));
    }
    if from.has_shape(GuestKind::Matching) && to.has_shape(GuestKind::Matching) {
        let flat = |g: &GuestGraph| g.edges().iter().flatten().copied().collect();
        return Some(along(flat(from), flat(to)));
    }
    match (classify_tree(from), classify_tree(to)) {
        (TreeClass::NotTree, _) | (_, TreeClass::NotTree) => None,
        _ => caterpillar_isomorphism(from, to),
    }
}

/// Rewrites `cert` so that its guests are `guests`, matching each to an
/// isomorphic guest of `cert` in order. `None` when some guest has no partner
/// or the result does not validate.
pub fn adopt(cert: &PackingCertificate, guests: &[GuestGraph]) -> Option<PackingCertificate> {
    if guests.len() != cert.instance.len() {
        return None;
    }
    let mut used = vec![false; guests.len()];
    let mut partner = vec![0; guests.len()];
    let mut mappings = Vec::with_capacity(guests.len());
    for (j, g) in guests.iter().enumerate() {
        let (i, iso) = cert.instance.iter().enumerate().find_map(|(i, h)| {
            if used[i] {
                return None;
            }
            guest_isomorphism(g, h).map(|iso| (i, iso))
        })?;
        used[i] = true;
        partner[i] = j;
        mappings.push(iso.iter().map(|&v| cert.mappings[i][v]).collect());
    }
    let mut drawing = cert.drawing.clone();
    for e in &mut drawing.edges {
        if let EdgeLabel::Guest(i) = e.label {
            e.label = EdgeLabel::Guest(*partner.get(i)?);
        }
    }
    let out = PackingCertificate {
        instance: guests.to_vec(),
        mappings,
        drawing,
        provenance: cert.provenance.clone(),
    };
    validate_certificate(&out).is_empty().then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("spiral".parse::<Strategy>().is_err());
    }

    #[test]
    fn selection_by_shape() {
        let p = GuestGraph::path_on(12);
        let c = GuestGraph::cycle_on(12);
        let t = GuestGraph::caterpillar(&[1, 5, 0, 1]);
        let m = GuestGraph::matching_on(12);
        assert_eq!(select_strategy(&[p.clone(), p.clone(), p.clone()]), Some(Strategy::ThreePaths));
        assert_eq!(select_strategy(&[c.clone(), c.clone(), c.clone()]), Some(Strategy::ThreeCycles));
        assert_eq!(
            select_strategy(&[t.clone(), p.clone(), p.clone()]),
            Some(Strategy::PathsCaterpillar)
        );
        assert_eq!(select_strategy(&[m.clone(), p.clone(), p.clone(), p.clone()]), Some(Strategy::PathsMatching));
        assert_eq!(select_strategy(&[c, p.clone(), p]), None);
    }

    #[test]
    fn relabeled_paths_keep_the_callers_numbering() {
        let n = 9;
        let order: Vec<Vertex> = (0..n).map(|i| (i * 4) % n).collect();
        let guests = vec![GuestGraph::path(&order), GuestGraph::path_on(n), GuestGraph::path_on(n)];
        let c = pack_instance(&guests, Strategy::Auto).unwrap();
        assert_eq!(c.instance, guests);
        assert!(validate_certificate(&c).is_empty());
    }

    #[test]
    fn matching_listed_first() {
        let n = 12;
        let mut guests = vec![GuestGraph::matching_on(n)];
        guests.extend(vec![GuestGraph::path_on(n); 3]);
        let c = pack_instance(&guests, Strategy::Auto).unwrap();
        assert_eq!(c.instance[0], guests[0]);
        assert!(validate_certificate(&c).is_empty());
    }

    #[test]
    fn caterpillar_in_the_middle() {
        let t = GuestGraph::caterpillar(&[1, 5, 0, 6, 1]);
        let n = t.n();
        let guests = vec![GuestGraph::path_on(n), t, GuestGraph::path_on(n)];
        let c = pack_instance(&guests, Strategy::Auto).unwrap();
        assert_eq!(c.instance, guests);
    }

    #[test]
    fn screen_refusals_carry_codes() {
        let e = pack_instance(&vec![GuestGraph::path_on(5); 3], Strategy::Auto).unwrap_err();
        assert_eq!(e.code(), "too-few-vertices");
        let mut q = vec![GuestGraph::path_on(10); 3];
        q.push(GuestGraph::matching_on(10));
        let e = pack_instance(&q, Strategy::Auto).unwrap_err();
        assert_eq!(e.code(), "quadruple-degree-six");
    }

    #[test]
    fn forced_strategy_must_fit() {
        let guests = vec![GuestGraph::cycle_on(20); 3];
        assert!(matches!(
            pack_instance(&guests, Strategy::ThreePaths),
            Err(PackError::Unsupported(_))
        ));
    }
}
