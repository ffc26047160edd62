use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CheckInfo, CheckParams, CheckSpec, Status};
use crate::exterior::{shuffle_by_expansion, shuffle_operator, wedge_of_unipotent};
use crate::fieldpoly::{Coeff, FieldMatrix, FieldSpec, MonomialOrder, PolyMatrix, Polynomial};
use crate::groebner::{
    groebner_basis, ideal_equal, orbit_closure_ideal, GroebnerBasis, GroebnerConfig, GroebnerError, Ideal,
};
use crate::laurent::{
    ch_inverse, companion_model, lattice_nilpotent, omega, omega_exact, x_membership, z_membership,
    LatticeOperatorSpec, MatrixPolynomial,
};
use crate::orbits::{
    dominance_cmp, dominance_leq, jordan_matrix, jordan_type, max_partition, orbit_dim, partitions, random_nilpotent,
    surjectivity_witness, Partition,
};
use crate::schemes::{
    intertwiner_system, invariance_chart_ideal, invariant_chart_ideal, nilpotent_scheme_ideal, phi,
    shuffle_chart_ideal, vee_scheme_ideal, Chart, Jacobian, JordanOperator, NilpotentSchemeSpec,
};

/// Status and witness of a finished check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub status: Status,
    pub witness: String,
}

impl CheckOutcome {
    fn pass(witness: impl Into<String>) -> Self {
        CheckOutcome { status: Status::Pass, witness: witness.into() }
    }

    fn fail(witness: impl Into<String>) -> Self {
        CheckOutcome { status: Status::Fail, witness: witness.into() }
    }
}

type CheckResult = Result<CheckOutcome, String>;

/// Unwrap a Gröbner result; timeouts and engine errors end the check.
macro_rules! gb {
    ($e:expr, $budget:expr) => {
        match $e {
            Ok(v) => v,
            Err(GroebnerError::Timeout { .. }) => {
                return Ok(CheckOutcome {
                    status: Status::Timeout,
                    witness: format!("Gröbner computation exceeded the {} s budget", $budget),
                })
            }
            Err(err) => return Ok(CheckOutcome::fail(format!("Gröbner engine error: {err}"))),
        }
    };
}

/// Early exit with a failing outcome.
macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(CheckOutcome::fail(format!($($msg)+)));
        }
    };
}

fn required<T: Copy>(value: Option<T>, name: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("parameter `{name}` is required"))
}

fn budget(p: &CheckParams) -> (GroebnerConfig, u64) {
    let secs = p.timeout_secs.unwrap_or(600);
    (GroebnerConfig::with_timeout(secs), secs)
}

fn monomial_order(p: &CheckParams) -> Result<MonomialOrder, String> {
    match p.order.as_deref() {
        None | Some("grevlex") => Ok(MonomialOrder::Grevlex),
        Some("lex") => Ok(MonomialOrder::Lex),
        Some(other) => Err(format!("unknown monomial order `{other}` (use grevlex or lex)")),
    }
}

fn prime_field(field: FieldSpec) -> Result<u64, String> {
    field.order().ok_or_else(|| "this check enumerates points and needs a prime field".to_string())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A basis element of `b` that does not reduce to zero modulo `a`.
fn non_member(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<Option<(Polynomial, Polynomial)>, GroebnerError> {
    for g in b.basis() {
        let r = a.normal_form(g)?;
        if !r.is_zero() {
            return Ok(Some((g.clone(), r)));
        }
    }
    Ok(None)
}

fn nilpotent_reduced(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let spec = NilpotentSchemeSpec::new(required(p.n, "n")?, required(p.e, "e")?).map_err(|e| e.to_string())?;
    let order = monomial_order(p)?;
    let (config, secs) = budget(p);
    let ideal = nilpotent_scheme_ideal(spec, field).map_err(|e| e.to_string())?;
    let tau = max_partition(spec.n, spec.e).map_err(|e| e.to_string())?;
    let oracle = gb!(orbit_closure_ideal(&tau, field, &config), secs).relabel(ideal.ring());
    let gi = gb!(groebner_basis(&ideal, &order, &config), secs);
    let go = gb!(groebner_basis(&oracle, &order, &config), secs);
    if gi.basis() == go.basis() {
        return Ok(CheckOutcome::pass(format!(
            "GB(I) = GB(oracle) for orbit closure {tau}: {} elements",
            gi.basis().len()
        )));
    }
    if let Some((g, r)) = gb!(non_member(&gi, &go), secs) {
        return Ok(CheckOutcome::fail(format!("oracle element {g} has normal form {r} modulo I")));
    }
    if let Some((g, r)) = gb!(non_member(&go, &gi), secs) {
        return Ok(CheckOutcome::fail(format!("element {g} of I has normal form {r} modulo the oracle")));
    }
    Ok(CheckOutcome::fail("reduced bases differ although the ideals contain each other"))
}

fn shuffle_identity(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let sigma = p.partition.clone().ok_or("parameter `partition` is required")?;
    let t = jordan_matrix(&sigma, field);
    let ambient = sigma.size();
    let degrees: Vec<usize> = match p.n {
        Some(n) if n == 0 || n > ambient => return Err(format!("wedge degree {n} out of range 1..={ambient}")),
        Some(n) => vec![n],
        None => (1..=ambient).collect(),
    };
    let mut entries = 0;
    for n in degrees {
        let w = wedge_of_unipotent(&t, n).map_err(|e| e.to_string())?;
        let ring = w.matrix().ring().clone();
        let z = Polynomial::var(&ring, 0);
        let mut sum = PolyMatrix::identity(&ring, w.basis().len());
        for d in 1..=n + 1 {
            let expanded = shuffle_by_expansion(&t, n, d).map_err(|e| e.to_string())?;
            let extracted = shuffle_operator(&t, n, d).map_err(|e| e.to_string())?.to_field();
            ensure!(
                expanded == extracted,
                "sh_{d} on degree {n}: expansion {expanded} differs from extraction {extracted}"
            );
            ensure!(d <= n || expanded.is_zero(), "sh_{d} on degree {n} is nonzero: {expanded}");
            sum = sum.add(&PolyMatrix::from_field(&ring, &expanded).scale(&z.pow(d as u32)));
        }
        for r in 0..sum.rows() {
            for c in 0..sum.cols() {
                ensure!(
                    sum.get(r, c) == w.matrix().get(r, c),
                    "degree {n}, entry ({}, {}): wedge gives {}, shuffle sum gives {}",
                    w.basis()[r],
                    w.basis()[c],
                    w.matrix().get(r, c),
                    sum.get(r, c)
                );
            }
        }
        entries += sum.rows() * sum.cols();
    }
    Ok(CheckOutcome::pass(format!("wedge of I + zT equals I + sum z^d sh_d on {entries} entries")))
}

fn shuffle_chart_equality(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let sigma = p.partition.clone().ok_or("parameter `partition` is required")?;
    let n = required(p.n, "n")?;
    if n == 0 || n > sigma.size() {
        return Err(format!("plane dimension {n} out of range 1..={}", sigma.size()));
    }
    let (config, secs) = budget(p);
    let t = JordanOperator::new(sigma, field);
    let charts = Chart::all(t.ambient_dim(), n);
    for chart in &charts {
        let inv = invariant_chart_ideal(&t, chart).map_err(|e| e.to_string())?;
        let shu = shuffle_chart_ideal(&t, chart).map_err(|e| e.to_string())?;
        if !gb!(ideal_equal(&inv, &shu, &config), secs) {
            let gi = gb!(groebner_basis(&inv, &MonomialOrder::Grevlex, &config), secs);
            let gs = gb!(groebner_basis(&shu, &MonomialOrder::Grevlex, &config), secs);
            let detail = match gb!(non_member(&gi, &gs), secs) {
                Some((g, r)) => format!("shuffle element {g} reduces to {r} modulo the invariant ideal"),
                None => match gb!(non_member(&gs, &gi), secs) {
                    Some((g, r)) => format!("invariant element {g} reduces to {r} modulo the shuffle ideal"),
                    None => "bases differ".to_string(),
                },
            };
            return Ok(CheckOutcome::fail(format!("{chart}: {detail}")));
        }
    }
    Ok(CheckOutcome::pass(format!("invariant and shuffle ideals agree on all {} charts", charts.len())))
}

fn invariance_contrast(_p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let config = GroebnerConfig::with_timeout(60);
    let t = JordanOperator::new(Partition::new(vec![2]).expect("valid"), field);
    let chart = Chart::new(2, crate::exterior::IndexSet::new(vec![1]).expect("valid")).expect("valid");
    let ring = chart.ring(field);
    let x = Polynomial::var(&ring, 0);
    let ideal_x = Ideal::new(&ring, vec![x.clone()]).expect("same ring");
    let ideal_x2 = Ideal::new(&ring, vec![x.pow(2)]).expect("same ring");
    let only = invariance_chart_ideal(&t, &chart).map_err(|e| e.to_string())?;
    let full = invariant_chart_ideal(&t, &chart).map_err(|e| e.to_string())?;
    let shuffle = shuffle_chart_ideal(&t, &chart).map_err(|e| e.to_string())?;
    ensure!(gb!(ideal_equal(&only, &ideal_x2, &config), 60), "invariance ideal {only} is not (x^2)");
    ensure!(!gb!(ideal_equal(&only, &ideal_x, &config), 60), "invariance ideal {only} is already (x)");
    ensure!(gb!(ideal_equal(&full, &ideal_x, &config), 60), "full ideal {full} is not (x)");
    ensure!(gb!(ideal_equal(&shuffle, &ideal_x, &config), 60), "shuffle ideal {shuffle} is not (x)");
    Ok(CheckOutcome::pass(format!(
        "invariance alone {only} = (x^2) != (x); with char poly {full} = (x); shuffle {shuffle}"
    )))
}

fn surjectivity(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let n = required(p.n, "n")?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let es: Vec<usize> = match p.e {
        Some(e) if e == 0 || e > n => return Err(format!("need 1 <= e <= n, got e={e}")),
        Some(e) => vec![e],
        None => (1..=n).collect(),
    };
    let mut count = 0;
    for e in es {
        let tau = max_partition(n, e).map_err(|e| e.to_string())?;
        let t = jordan_matrix(&Partition::rectangle(e, n), field);
        for sigma in partitions(n) {
            let dominated = dominance_leq(&sigma, &tau).map_err(|e| e.to_string())?;
            let fits = sigma.largest() <= e;
            ensure!(dominated == fits, "{sigma} <= {tau} is {dominated} but largest part <= {e} is {fits}");
            match surjectivity_witness(n, e, &sigma, field) {
                Ok(psi) => {
                    ensure!(fits, "witness produced for {sigma} with e = {e}");
                    let js = jordan_matrix(&sigma, field);
                    ensure!(t.mul(&psi) == psi.mul(&js), "T Psi != Psi J for {sigma}, e = {e}: Psi = {psi}");
                    ensure!(psi.rank() == n, "Psi has rank {} for {sigma}, e = {e}", psi.rank());
                    let b = phi(&t, &psi).map_err(|e| e.to_string())?;
                    let ty = jordan_type(&b).map_err(|e| e.to_string())?;
                    ensure!(ty == sigma, "phi image {b} has type {ty}, expected {sigma}");
                    count += 1;
                }
                Err(_) => ensure!(!fits, "no witness for {sigma} with e = {e}"),
            }
        }
    }
    Ok(CheckOutcome::pass(format!("{count} (e, sigma) pairs realised by explicit witnesses")))
}

fn random_vector<R: rand::Rng>(field: FieldSpec, basis: &[Vec<Coeff>], len: usize, rng: &mut R) -> Vec<Coeff> {
    let mut v = vec![field.zero(); len];
    for b in basis {
        let c = field.random(rng, 5);
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = field.add(vi, &field.mul(&c, bi));
        }
    }
    v
}

fn relative_dimension(p: &CheckParams, field: FieldSpec, seed: u64) -> CheckResult {
    let spec = NilpotentSchemeSpec::new(required(p.n, "n")?, required(p.e, "e")?).map_err(|e| e.to_string())?;
    let trials = p.trials.unwrap_or(100);
    let (n, e) = (spec.n, spec.e);
    let blocks = n;
    let t = JordanOperator::rectangular(e, blocks, field);
    let vee = Jacobian::new(&vee_scheme_ideal(spec, &t).map_err(|e| e.to_string())?);
    let base = Jacobian::new(&nilpotent_scheme_ideal(spec, field).map_err(|e| e.to_string())?);
    let mut rng = rng(seed);
    for trial in 0..trials {
        let (_, a) = random_nilpotent(field, n, e, &mut rng);
        let system = intertwiner_system(t.matrix(), &a);
        let kernel = system.nullspace();
        ensure!(
            kernel.len() == n * blocks,
            "trial {trial}: A = {a} has fiber dimension {} != {}",
            kernel.len(),
            n * blocks
        );
        let psi = random_vector(field, &kernel, system.cols(), &mut rng);
        let mut point: Vec<Coeff> = a.entries().to_vec();
        point.extend(psi.iter().cloned());
        let total = vee.tangent_dim(&point).map_err(|e| e.to_string())?;
        let tangent_a = base.tangent_dim(a.entries()).map_err(|e| e.to_string())?;
        ensure!(
            total == tangent_a + n * blocks,
            "trial {trial}: A = {a}, Psi = {}: tangent dimension {total} != {tangent_a} + {}",
            FieldMatrix::from_fn(field, t.ambient_dim(), n, |i, j| psi[i * n + j].clone()),
            n * blocks
        );
    }
    Ok(CheckOutcome::pass(format!("{trials} points: fiber dimension {} and additive tangent dimensions", n * blocks)))
}

fn ch_inverse_check(p: &CheckParams, field: FieldSpec, seed: u64) -> CheckResult {
    let n = required(p.n, "n")?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let trials = p.trials.unwrap_or(200);
    let mut rng = rng(seed);
    for trial in 0..trials {
        let (_, c) = random_nilpotent(field, n, n, &mut rng);
        let inv = match ch_inverse(&c) {
            Ok(inv) => inv,
            Err(err) => return Ok(CheckOutcome::fail(format!("trial {trial}: C = {c}: {err}"))),
        };
        let product = MatrixPolynomial::linear(&c.scale(&field.from_i64(-1))).mul(&inv);
        ensure!(
            product == MatrixPolynomial::identity(field, n),
            "trial {trial}: C = {c}: (1 - C t^-1) * {inv} = {product}"
        );
        ensure!(x_membership(&inv), "trial {trial}: {inv} is not in X");
    }
    Ok(CheckOutcome::pass(format!("{trials} matrices: (1 - C t^-1)(1 + C t^-1 + ...) = 1 exactly")))
}

const OMEGA_ORDER: usize = 6;

fn omega_involution(p: &CheckParams, field: FieldSpec, seed: u64) -> CheckResult {
    let n = required(p.n, "n")?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let trials = p.trials.unwrap_or(200);
    let degree = p.degree.unwrap_or(3);
    let mut rng = rng(seed);
    for trial in 0..trials {
        let mut coeffs = vec![FieldMatrix::identity(field, n)];
        for _ in 0..degree {
            coeffs.push(FieldMatrix::random(field, n, n, &mut rng));
        }
        let a = MatrixPolynomial::new(coeffs).map_err(|e| e.to_string())?;
        let once = omega(&a, OMEGA_ORDER).map_err(|e| e.to_string())?;
        let twice = omega(&once, OMEGA_ORDER).map_err(|e| e.to_string())?;
        ensure!(twice == a.truncated(OMEGA_ORDER), "trial {trial}: A = {a}: omega(omega(A)) = {twice}");
    }
    Ok(CheckOutcome::pass(format!(
        "{trials} inputs of degree {degree}: omega twice is the identity to order {OMEGA_ORDER}"
    )))
}

fn all_matrices(field: FieldSpec, n: usize) -> Vec<FieldMatrix> {
    let elems = field.elements().expect("finite field");
    let q = elems.len();
    let total = q.pow((n * n) as u32);
    (0..total)
        .map(|mut idx| {
            let mut data = Vec::with_capacity(n * n);
            for _ in 0..n * n {
                data.push(elems[idx % q].clone());
                idx /= q;
            }
            FieldMatrix::from_fn(field, n, n, |i, j| data[i * n + j].clone())
        })
        .collect()
}

fn omega_bijection(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let n = required(p.n, "n")?;
    if n == 0 || n > 3 {
        return Err("full enumeration supports 1 <= n <= 3".into());
    }
    prime_field(field)?;
    let matrices = all_matrices(field, n);
    let z1: HashSet<String> =
        matrices.iter().map(MatrixPolynomial::linear).filter(|a| z_membership(a, 1)).map(|a| a.to_string()).collect();
    let mut images = HashSet::new();
    let mut x_count = 0;
    for c in matrices.iter().filter(|c| c.has_nilpotent_char_poly()) {
        let a = ch_inverse(c).map_err(|e| e.to_string())?;
        ensure!(x_membership(&a), "{a} is not in X");
        x_count += 1;
        let w = match omega_exact(&a) {
            Ok(w) => w,
            Err(err) => return Ok(CheckOutcome::fail(format!("omega({a}): {err}"))),
        };
        ensure!(z_membership(&w, 1), "omega({a}) = {w} is not in Z_1");
        let back = omega_exact(&w).map_err(|e| e.to_string())?;
        ensure!(back == a, "omega(omega({a})) = {back}");
        ensure!(images.insert(w.to_string()), "omega is not injective: {w} is hit twice");
    }
    ensure!(images == z1, "image has {} points but Z_1 has {}", images.len(), z1.len());
    Ok(CheckOutcome::pass(format!("|X| = |Z_1| = {x_count}; omega is a bijection")))
}

fn companion_check(p: &CheckParams, field: FieldSpec, seed: u64) -> CheckResult {
    let n = required(p.n, "n")?;
    let deg = p.degree.unwrap_or(1);
    if n == 0 || deg == 0 {
        return Err("n and degree must be positive".into());
    }
    let trials = p.trials.unwrap_or(100);
    let mut rng = rng(seed);
    for trial in 0..trials {
        let mut a = MatrixPolynomial::identity(field, n);
        for _ in 0..deg {
            let (_, b) = random_nilpotent(field, n, n, &mut rng);
            a = a.mul(&MatrixPolynomial::linear(&b));
        }
        ensure!(z_membership(&a, deg), "trial {trial}: sample {a} is not in Z_{deg}");
        let (_, chi) = match companion_model(&a, deg) {
            Ok(v) => v,
            Err(err) => return Ok(CheckOutcome::fail(format!("trial {trial}: A = {a}: {err}"))),
        };
        // λ^{pn} det A(λ^-1) from the determinant coefficients
        let ring = chi.ring().clone();
        let lambda = Polynomial::var(&ring, 0);
        let top = deg * n;
        let expected = a
            .det_coeffs()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k <= top)
            .fold(Polynomial::zero(&ring), |acc, (k, d)| &acc + &lambda.pow((top - k) as u32).scale(d));
        ensure!(chi == expected, "trial {trial}: A = {a}: companion gives {chi}, expected {expected}");
    }
    Ok(CheckOutcome::pass(format!("{trials} samples in Z_{deg}: char poly equals lambda^{} det A(1/lambda)", deg * n)))
}

fn lattice_type(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let spec = LatticeOperatorSpec::new(required(p.n, "n")?, required(p.a, "a")?, required(p.b, "b")?)
        .map_err(|e| e.to_string())?;
    let op = match lattice_nilpotent(spec, field) {
        Ok(op) => op,
        Err(err) => return Ok(CheckOutcome::fail(err.to_string())),
    };
    let m = spec.a + spec.b;
    let expected = Partition::rectangle(m, spec.n);
    let ty = jordan_type(op.matrix()).map_err(|e| e.to_string())?;
    ensure!(ty == expected, "T_(a,b) has type {ty}, expected {expected}");
    ensure!(op.matrix().pow(m as u32).is_zero(), "T^(a+b) != 0");
    ensure!(!op.matrix().pow(m as u32 - 1).is_zero(), "T^(a+b-1) = 0");
    ensure!(op.ambient_dim() == spec.n * m, "ambient dimension {}", op.ambient_dim());
    Ok(CheckOutcome::pass(format!("T_({},{}) has type {ty} on dimension {}", spec.a, spec.b, op.ambient_dim())))
}

fn orbit_dimension(p: &CheckParams, field: FieldSpec, _seed: u64) -> CheckResult {
    let n = required(p.n, "n")?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let all = partitions(n);
    for sigma in &all {
        let j = jordan_matrix(sigma, field);
        let ty = jordan_type(&j).map_err(|e| e.to_string())?;
        ensure!(&ty == sigma, "jordan_type(J_{sigma}) = {ty}");
        let centralizer = intertwiner_system(&j, &j).nullity();
        ensure!(
            orbit_dim(sigma) == n * n - centralizer,
            "orbit_dim({sigma}) = {} but the centralizer has dimension {centralizer}",
            orbit_dim(sigma)
        );
    }
    let mut covers = 0;
    for lo in &all {
        for hi in &all {
            if dominance_cmp(lo, hi).map_err(|e| e.to_string())? != Some(std::cmp::Ordering::Less) {
                continue;
            }
            let between = all.iter().any(|mid| {
                dominance_cmp(lo, mid).ok().flatten() == Some(std::cmp::Ordering::Less)
                    && dominance_cmp(mid, hi).ok().flatten() == Some(std::cmp::Ordering::Less)
            });
            if !between {
                covers += 1;
                ensure!(
                    orbit_dim(lo) < orbit_dim(hi),
                    "cover {lo} < {hi} but orbit dimensions {} >= {}",
                    orbit_dim(lo),
                    orbit_dim(hi)
                );
            }
        }
    }
    Ok(CheckOutcome::pass(format!("{} partitions, {covers} covering relations", all.len())))
}

pub(super) static REGISTRY: &[CheckInfo] = &[
    CheckInfo {
        name: "ch_inverse",
        description: "(1 - C t^-1)^-1 = 1 + C t^-1 + ... + C^(n-1) t^-(n-1) for random C with char poly λ^n",
        params: &["n", "field", "trials"],
        default_field: FieldSpec::Prime(5),
        run: ch_inverse_check,
    },
    CheckInfo {
        name: "companion_model",
        description: "char poly of the block companion matrix equals λ^(pn) det A(1/λ) on random A in Z_p",
        params: &["n", "degree", "field", "trials"],
        default_field: FieldSpec::Prime(5),
        run: companion_check,
    },
    CheckInfo {
        name: "invariance_contrast",
        description: "line in the plane under J_2: invariance alone gives (x^2), adding the char poly gives (x)",
        params: &["field"],
        default_field: FieldSpec::Rationals,
        run: invariance_contrast,
    },
    CheckInfo {
        name: "lattice_type",
        description: "multiplication by t on t^-b L0 / t^a L0 has Jordan type ((a+b)^n)",
        params: &["n", "a", "b", "field"],
        default_field: FieldSpec::Rationals,
        run: lattice_type,
    },
    CheckInfo {
        name: "nilpotent_reduced",
        description: "the ideal of A^e = 0, det(λ - A) = λ^n equals the prime ideal of the largest orbit closure",
        params: &["n", "e", "field", "timeout_secs", "order"],
        default_field: FieldSpec::Rationals,
        run: nilpotent_reduced,
    },
    CheckInfo {
        name: "omega_bijection",
        description: "omega maps X(F_q) bijectively onto Z_1(F_q), by full enumeration",
        params: &["n", "field"],
        default_field: FieldSpec::Prime(2),
        run: omega_bijection,
    },
    CheckInfo {
        name: "omega_involution",
        description: "omega(omega(A)) = A to order 6 on random big-cell polynomials",
        params: &["n", "degree", "field", "trials"],
        default_field: FieldSpec::Prime(7),
        run: omega_involution,
    },
    CheckInfo {
        name: "orbit_dimension",
        description: "orbit dimensions against centralizer nullities, monotone along dominance covers",
        params: &["n", "field"],
        default_field: FieldSpec::Rationals,
        run: orbit_dimension,
    },
    CheckInfo {
        name: "relative_dimension",
        description: "intertwiner fibers have dimension n*blocks and tangent dimensions add up",
        params: &["n", "e", "field", "trials"],
        default_field: FieldSpec::Prime(5),
        run: relative_dimension,
    },
    CheckInfo {
        name: "shuffle_chart_equality",
        description: "invariant-subspace and shuffle chart ideals agree on every Grassmannian chart",
        params: &["partition", "n", "field", "timeout_secs"],
        default_field: FieldSpec::Rationals,
        run: shuffle_chart_equality,
    },
    CheckInfo {
        name: "shuffle_identity",
        description: "wedge of I + zT equals I + sum z^d sh_d with sh_d from the multilinear expansion",
        params: &["partition", "n", "field"],
        default_field: FieldSpec::Rationals,
        run: shuffle_identity,
    },
    CheckInfo {
        name: "surjectivity",
        description: "every Jordan type with parts <= e is the restriction of T to an explicit invariant subspace",
        params: &["n", "e", "field"],
        default_field: FieldSpec::Rationals,
        run: surjectivity,
    },
];

fn spec(name: &str, f: impl FnOnce(&mut CheckParams)) -> CheckSpec {
    let mut params = CheckParams::default();
    f(&mut params);
    CheckSpec::new(name, params)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn core_suite() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for size in 1..=6 {
        for sigma in partitions(size) {
            out.push(spec("shuffle_identity", |p| p.partition = Some(sigma)));
        }
    }
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
        for (sigma, n) in [(part(&[2]), 1), (part(&[2, 2]), 2), (part(&[3, 1]), 2), (part(&[2, 2, 2]), 3)] {
            out.push(spec("shuffle_chart_equality", |p| {
                p.partition = Some(sigma);
                p.n = Some(n);
                p.field = Some(field);
            }));
        }
        out.push(spec("invariance_contrast", |p| p.field = Some(field)));
    }
    for n in 1..=6 {
        out.push(spec("orbit_dimension", |p| p.n = Some(n)));
    }
    out
}

fn reducedness_suite() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        for (n, e) in [(1, 1), (2, 2), (3, 2), (3, 3)] {
            out.push(spec("nilpotent_reduced", |p| {
                p.n = Some(n);
                p.e = Some(e);
                p.field = Some(field);
            }));
        }
    }
    for (n, e) in [(4, 2), (4, 3)] {
        out.push(spec("nilpotent_reduced", |p| {
            p.n = Some(n);
            p.e = Some(e);
            p.field = Some(FieldSpec::Rationals);
        }));
    }
    out
}

fn surjectivity_suite() -> Vec<CheckSpec> {
    let mut out: Vec<CheckSpec> = (1..=6).map(|n| spec("surjectivity", |p| p.n = Some(n))).collect();
    for n in 1..=4 {
        for e in 1..=n {
            out.push(spec("relative_dimension", |p| {
                p.n = Some(n);
                p.e = Some(e);
            }));
        }
    }
    out
}

fn laurent_suite() -> Vec<CheckSpec> {
    let mut out: Vec<CheckSpec> = (1..=5).map(|n| spec("ch_inverse", |p| p.n = Some(n))).collect();
    out.extend((1..=4).map(|n| spec("omega_involution", |p| p.n = Some(n))));
    for field in [FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        for n in [2, 3] {
            out.push(spec("omega_bijection", |p| {
                p.n = Some(n);
                p.field = Some(field);
            }));
        }
    }
    for n in 1..=3 {
        for d in 1..=2 {
            out.push(spec("companion_model", |p| {
                p.n = Some(n);
                p.degree = Some(d);
            }));
        }
    }
    for (n, a, b) in [(1, 1, 1), (2, 1, 1), (3, 1, 1), (3, 1, 2), (4, 1, 3), (2, 2, 1), (2, 0, 3)] {
        out.push(spec("lattice_type", |p| {
            p.n = Some(n);
            p.a = Some(a);
            p.b = Some(b);
        }));
    }
    out
}

pub(super) fn suite(name: &str) -> Option<Vec<CheckSpec>> {
    Some(match name {
        "core" => core_suite(),
        "reducedness" => reducedness_suite(),
        "surjectivity" => surjectivity_suite(),
        "laurent" => laurent_suite(),
        "all" => {
            let mut all = core_suite();
            all.extend(reducedness_suite());
            all.extend(surjectivity_suite());
            all.extend(laurent_suite());
            all
        }
        _ => return None,
    })
}
