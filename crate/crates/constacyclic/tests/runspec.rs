use constacyclic::dto::{CodeDescriptor, EnumeratorDto, FamilyDescriptor};
use constacyclic::{AppError, Command, Format, Preset, RunSpec, Status};
use constacyclic_core::distance::WeightEnumerator;
use constacyclic_core::families::{Family, FamilyParams};
use constacyclic_core::galois::Tower;
use proptest::prelude::*;
use std::sync::Arc;

fn family() -> impl Strategy<Value = FamilyDescriptor> {
    (
        proptest::sample::select(vec!["parity", "qweight", "cprm", "s1", "s2", "s3", "s4"]),
        2u64..10,
        1u32..8,
        proptest::option::of(0u32..5),
        proptest::option::of(0u32..2),
        proptest::option::of(proptest::collection::vec(0u32..6, 0..4)),
    )
        .prop_map(|(f, q, m, ell, i, selectors)| FamilyDescriptor {
            family: f.to_string(),
            q,
            m,
            ell,
            i,
            selectors,
        })
}

fn command() -> impl Strategy<Value = Command> {
    prop_oneof![
        (2u64..50, 1u32..6, 1u64..8).prop_map(|(q, m, r)| Command::Field { q, m, r }),
        (2u64..50, 1u32..6, 1u64..8, 0u64..4).prop_map(|(q, m, r, residue)| Command::Cosets { q, m, r, residue }),
        family().prop_map(|family| Command::Construct { family }),
        (proptest::option::of(family()), any::<bool>()).prop_map(|(family, dual)| Command::Certify {
            family,
            descriptor: None,
            dual
        }),
        (1u8..3).prop_map(|id| Command::Table { id }),
        (2u64..10, 2u32..7).prop_map(|(q, m)| Command::SelfdualScan { q, m }),
    ]
}

proptest! {
    #[test]
    fn runspec_json_round_trips(
        cmd in command(),
        budget in any::<u64>(),
        extended in any::<bool>(),
        auto in any::<bool>(),
        modulus in proptest::option::of(proptest::collection::vec(0u32..7, 1..6)),
    ) {
        let mut spec = RunSpec::new(cmd);
        spec.budget = budget;
        spec.extended = extended;
        spec.modulus = modulus;
        spec.preset = if auto { Preset::Auto } else { Preset::Paper };
        spec.format = Format::Csv;
        let back = RunSpec::from_json(&spec.to_json()).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn enumerator_dto_round_trips(counts in proptest::collection::vec(0u64..1000, 1..30)) {
        let mut counts = counts;
        counts[0] = 1;
        let e = WeightEnumerator { counts: counts.clone() };
        let dto = EnumeratorDto::new(&e);
        let text = serde_json::to_string(&dto).unwrap();
        let back: EnumeratorDto = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_enumerator(counts.len() - 1).counts, counts);
    }
}

#[test]
fn defaults_and_unknown_fields() {
    let spec = RunSpec::from_json(r#"{"command": {"name": "table", "id": 2}}"#).unwrap();
    assert_eq!(spec, RunSpec::new(Command::Table { id: 2 }));
    assert!(RunSpec::from_json(r#"{"command": {"name": "table", "id": 2}, "budgett": 5}"#).is_err());
    assert!(RunSpec::from_json(r#"{"command": {"name": "table", "id": 2, "x": 1}}"#).is_err());
    assert!(RunSpec::from_json(r#"{"command": {"name": "tables", "id": 2}}"#).is_err());
    let c = RunSpec::from_json(r#"{"command": {"name": "cosets", "q": 3, "m": 2, "r": 2}}"#).unwrap();
    assert_eq!(c.command, Command::Cosets { q: 3, m: 2, r: 2, residue: 1 });
}

#[test]
fn enumerator_json_shape() {
    let e = WeightEnumerator { counts: vec![1, 0, 0, 8, 0] };
    let text = serde_json::to_string(&EnumeratorDto::new(&e)).unwrap();
    assert_eq!(text, r#"{"counts":{"0":1,"3":8}}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(Status::Ok.exit_code(), 0);
    assert_eq!(Status::BudgetExhausted.exit_code(), 3);
    assert_eq!(Status::Mismatch.exit_code(), 4);
    assert_eq!(AppError::Usage(String::new()).exit_code(), 2);
    let io = AppError::Io(std::io::Error::other("x"));
    assert_eq!(io.exit_code(), 1);
    let budget = AppError::Core(constacyclic_core::Error::BudgetExceeded { needed: 2, budget: 1 });
    assert_eq!(budget.exit_code(), 3);
}

#[test]
fn family_descriptor_round_trip() {
    let fams = [
        (Family::Parity(1), 3, 4),
        (Family::QWeight(2), 5, 3),
        (Family::Cprm(1), 3, 4),
        (Family::S1, 3, 5),
        (Family::S2, 3, 5),
        (Family::S3(0), 4, 4),
        (Family::S4(vec![3, 1]), 3, 4),
    ];
    for (f, q, m) in fams {
        let p = FamilyParams::new(f, q, m).unwrap();
        let d = FamilyDescriptor::from_params(&p);
        let text = serde_json::to_string(&d).unwrap();
        let back: FamilyDescriptor = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_params().unwrap(), p);
    }
}

#[test]
fn code_descriptor_round_trip() {
    let p = FamilyParams::new(Family::S3(0), 3, 4).unwrap();
    let t = Arc::new(Tower::with_reference_preset(p.field_spec().unwrap()).unwrap());
    let c = p.build(t).unwrap();
    for code in [c.clone(), c.dual(), c.reverse()] {
        let d = CodeDescriptor::from_code(&code);
        let back: CodeDescriptor = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back.to_code().unwrap(), code);
    }
}
