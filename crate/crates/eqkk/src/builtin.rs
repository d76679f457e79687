//! Scenarios shipped with the binary; the JSON sources live in
//! `scenarios/` next to the crate manifest.

use crate::scenario::Scenario;
use crate::HarnessError;

const SOURCES: [(&str, &str); 7] = [
    ("c2-rational-regular", include_str!("../scenarios/c2-rational-regular.json")),
    ("c3-rational", include_str!("../scenarios/c3-rational.json")),
    ("c4-rational", include_str!("../scenarios/c4-rational.json")),
    ("s3-rational", include_str!("../scenarios/s3-rational.json")),
    ("c2-mod3", include_str!("../scenarios/c2-mod3.json")),
    ("c2-mod2", include_str!("../scenarios/c2-mod2.json")),
    ("trivial-group", include_str!("../scenarios/trivial-group.json")),
];

pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Option<Result<Scenario, HarnessError>> {
    source(name).map(Scenario::from_json)
}

pub fn all() -> Vec<Scenario> {
    SOURCES
        .iter()
        .map(|(_, s)| Scenario::from_json(s).expect("shipped scenario parses"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{resolve, Resolution};

    #[test]
    fn shipped_scenarios_resolve() {
        for s in all() {
            match resolve(&s).unwrap() {
                Resolution::Ready(r) => {
                    for a in &r.algebras {
                        assert!(a.built.is_ok(), "{} / {}", s.name, a.name);
                    }
                }
                Resolution::BrokenGroup(e) => panic!("{}: {e}", s.name),
            }
        }
        assert!(names().contains(&"c2-rational-regular"));
    }

    #[test]
    fn s3_scenario_has_pointed_section() {
        let s = load("s3-rational").unwrap().unwrap();
        let Resolution::Ready(r) = resolve(&s).unwrap() else { panic!() };
        let cosets = r.cosets.unwrap();
        assert_eq!(cosets.len(), 2);
        assert_eq!(cosets.labels(), vec!["eH".to_string(), "(12)H".to_string()]);
    }
}
