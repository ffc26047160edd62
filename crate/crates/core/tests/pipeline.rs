use nilred::exterior::plucker_relations;
use nilred::fieldpoly::{Coeff, FieldMatrix, FieldSpec, Polynomial};
use nilred::groebner::{ideal_equal, orbit_closure_ideal, GroebnerConfig, Ideal};
use nilred::laurent::{ch_inverse, companion_model, omega_exact, x_membership, z_membership, MatrixPolynomial};
use nilred::orbits::{jordan_matrix, jordan_type, max_partition, partitions, surjectivity_witness, Partition};
use nilred::schemes::{
    invariant_chart_ideal, nilpotent_scheme_ideal, phi, shuffle_chart_ideal, tangent_dim, vee_scheme_ideal, Chart,
    JordanOperator, NilpotentSchemeSpec,
};

const F3: FieldSpec = FieldSpec::Prime(3);

fn cfg() -> GroebnerConfig {
    GroebnerConfig::default()
}

#[test]
fn ideal_files_survive_a_disk_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n22.txt");
    let ideal = nilpotent_scheme_ideal(NilpotentSchemeSpec::new(2, 2).unwrap(), F3).unwrap();
    std::fs::write(&path, ideal.to_file_string()).unwrap();
    let back = Ideal::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back.field(), F3);
    assert!(ideal_equal(&ideal, &back, &cfg()).unwrap());
}

#[test]
fn regular_nilpotent_scheme_is_the_orbit_closure() {
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), F3] {
        let spec = NilpotentSchemeSpec::new(2, 2).unwrap();
        let ideal = nilpotent_scheme_ideal(spec, field).unwrap();
        let tau = max_partition(2, 2).unwrap();
        let oracle = orbit_closure_ideal(&tau, field, &cfg()).unwrap().relabel(ideal.ring());
        assert!(ideal_equal(&ideal, &oracle, &cfg()).unwrap(), "{field}");
    }
}

#[test]
fn nilpotency_bound_one_forces_zero() {
    let ideal = nilpotent_scheme_ideal(NilpotentSchemeSpec::new(3, 1).unwrap(), F3).unwrap();
    let ring = ideal.ring();
    let zero = Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).unwrap();
    assert!(ideal_equal(&ideal, &zero, &cfg()).unwrap());
}

#[test]
fn witnesses_are_points_of_the_vee_scheme() {
    let (n, e) = (3, 2);
    let spec = NilpotentSchemeSpec::new(n, e).unwrap();
    let t = JordanOperator::rectangular(e, n, F3);
    let ideal = vee_scheme_ideal(spec, &t).unwrap();
    for sigma in partitions(n).into_iter().filter(|s| s.largest() <= e) {
        let psi = surjectivity_witness(n, e, &sigma, F3).unwrap();
        let a = phi(t.matrix(), &psi).unwrap();
        assert_eq!(jordan_type(&a).unwrap(), sigma);
        let point: Vec<Coeff> = a.entries().iter().chain(psi.entries()).cloned().collect();
        for g in ideal.generators() {
            assert_eq!(g.eval(&point), F3.zero(), "{g} at {sigma}");
        }
        assert!(tangent_dim(&ideal, &point).unwrap() >= n * n);
    }
}

#[test]
fn charts_of_gr_2_4_agree_for_type_2_2() {
    let t = JordanOperator::new(Partition::new(vec![2, 2]).unwrap(), FieldSpec::Prime(2));
    for chart in Chart::all(4, 2) {
        let inv = invariant_chart_ideal(&t, &chart).unwrap();
        let sh = shuffle_chart_ideal(&t, &chart).unwrap();
        assert!(ideal_equal(&inv, &sh, &cfg()).unwrap(), "{chart}");
    }
}

#[test]
fn plucker_ideal_of_gr_2_4_is_principal() {
    let (ring, rels) = plucker_relations(4, 2, FieldSpec::Rationals).unwrap();
    assert_eq!(rels.len(), 1);
    assert_eq!(rels[0].degree(), Some(2));
    assert_eq!(ring.nvars(), 6);
}

#[test]
fn laurent_round_trip_from_a_jordan_block() {
    for n in 1..=4 {
        let j = jordan_matrix(&Partition::new(vec![n]).unwrap(), F3);
        let a = ch_inverse(&j).unwrap();
        assert!(x_membership(&a));
        let w = omega_exact(&a).unwrap();
        assert!(z_membership(&w, 1), "n = {n}: {w}");
        assert_eq!(omega_exact(&w).unwrap(), a);
        let (companion, chi) = companion_model(&w, 1).unwrap();
        assert_eq!(companion.rows(), n);
        assert_eq!(chi.degree(), Some(n as u32));
    }
}

#[test]
fn linear_polynomial_companion_is_its_coefficient() {
    let c = FieldMatrix::from_i64(F3, &[vec![0, 1], vec![0, 0]]);
    let a = MatrixPolynomial::linear(&c);
    let (companion, _) = companion_model(&a, 1).unwrap();
    assert_eq!(jordan_type(&companion).unwrap(), Partition::new(vec![2]).unwrap());
}
