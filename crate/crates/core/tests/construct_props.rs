use cgrid_ham::acceptability::check;
use cgrid_ham::construct::construct_path;
use cgrid_ham::grid::{validate_path, ProblemInstance, Shape, Vertex};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = Shape> {
    let rect = (1..40i32, 1..40i32).prop_map(|(m, n)| Shape::rect(m, n).unwrap());
    let l = (2..40i32, 2..40i32)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 1..m, 1..n))
        .prop_map(|(m, n, k, l)| Shape::lshape(m, n, k, l).unwrap());
    let c = (3..40i32, 2..40i32)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 1..m - 1, 1..n, 1..m - 1))
        .prop_filter_map("notch fits", |(m, n, k, l, d)| Shape::cshape(m, n, k, l, d).ok());
    prop_oneof![rect, l, c]
}

fn instance() -> impl Strategy<Value = ProblemInstance> {
    shape()
        .prop_flat_map(|sh| {
            let n = sh.size() as usize;
            (Just(sh), 0..n, 0..n)
        })
        .prop_filter_map("distinct endpoints", |(sh, i, j)| {
            let vs: Vec<Vertex> = sh.vertices().collect();
            (i != j).then(|| ProblemInstance::new(sh, vs[i], vs[j]).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn acceptable_instances_get_valid_paths(inst in instance()) {
        if check(&inst).is_acceptable() {
            let path = construct_path(&inst).map_err(|e| TestCaseError::fail(format!("{inst}: {e}")))?;
            prop_assert!(validate_path(&inst, &path).is_ok(), "{}", inst);
        } else {
            prop_assert!(construct_path(&inst).is_err());
        }
    }

    #[test]
    fn verdict_is_symmetric_in_endpoints(inst in instance()) {
        prop_assert_eq!(check(&inst).is_acceptable(), check(&inst.swapped()).is_acceptable());
    }
}
