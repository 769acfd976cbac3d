//! Construction tests for the critical-point systems, pinned against hand
//! derivations and the worked examples' published equations.

use num_traits::Zero;
use polycore::{int, parse_expr, rat, LaurentPoly, Rat};
use systems::{
    complex_split, extended_system, general_real_system, smooth_system, stratum_system,
    FactoredDenominator, PolySystem, Provenance, SystemsError,
};

fn poly(text: &str, vars: &[&str]) -> LaurentPoly {
    let combo = parse_expr(text, vars).unwrap();
    assert!(combo.denominator().is_constant());
    combo
        .numerator()
        .scale(&combo.denominator().constant_term().recip())
}

/// Evaluates every equation of `sys` at `point` and asserts all vanish.
fn assert_solution(sys: &PolySystem, point: &[Rat]) {
    for eq in sys.equations() {
        assert!(
            eq.eval(point).is_zero(),
            "equation {} not satisfied",
            eq.pretty_print()
        );
    }
}

#[test]
fn smooth_system_of_binomial_denominator() {
    let sys = smooth_system(&poly("1 - x - y", &["x", "y"])).unwrap();
    assert_eq!(sys.provenance(), &Provenance::Smooth);
    assert_eq!(sys.variables(), &["x", "y", "lambda"]);
    let vars = ["x", "y", "lambda"];
    assert_eq!(sys.equations().len(), 3);
    assert_eq!(sys.equations()[0], poly("1 - x - y", &vars));
    assert_eq!(sys.equations()[1], poly("-x - lambda", &vars));
    assert_eq!(sys.equations()[2], poly("-y - lambda", &vars));
    // The unique critical point (1/2, 1/2) with gradient value -1/2.
    assert_solution(&sys, &[rat(1, 2), rat(1, 2), rat(-1, 2)]);
}

#[test]
fn smooth_system_in_one_variable() {
    let sys = smooth_system(&poly("1 - z", &["z"])).unwrap();
    assert_eq!(sys.variables(), &["z", "lambda"]);
    assert_eq!(sys.equations()[0], poly("1 - z", &["z", "lambda"]));
    assert_eq!(sys.equations()[1], poly("-z - lambda", &["z", "lambda"]));
    assert_solution(&sys, &[int(1), int(-1)]);
}

#[test]
fn smooth_system_rejects_constants() {
    let c = LaurentPoly::constant(&["x"], rat(5, 1));
    assert!(matches!(
        smooth_system(&c),
        Err(SystemsError::ConstantPolynomial)
    ));
    assert!(matches!(
        extended_system(&c),
        Err(SystemsError::ConstantPolynomial)
    ));
}

#[test]
fn smooth_system_clears_laurent_units() {
    // x^{-1} + y is x^{-1}(1 + x y): critical points off the axes match 1 + x y.
    let h = LaurentPoly::from_terms(&["x", "y"], [(vec![-1, 0], int(1)), (vec![0, 1], int(1))]);
    let sys = smooth_system(&h).unwrap();
    let vars = ["x", "y", "lambda"];
    assert_eq!(sys.equations()[0], poly("1 + x*y", &vars));
    assert_eq!(sys.equations()[1], poly("x*y - lambda", &vars));
    // x y = -1 forces lambda = -1 on the variety.
    assert_solution(&sys, &[int(2), rat(-1, 2), int(-1)]);
}

#[test]
fn extended_system_adds_the_scaled_copy() {
    let sys = extended_system(&poly("1 - x - y", &["x", "y"])).unwrap();
    assert_eq!(sys.provenance(), &Provenance::Extended);
    assert_eq!(sys.variables(), &["x", "y", "lambda", "t"]);
    let vars = ["x", "y", "lambda", "t"];
    assert_eq!(sys.equations().len(), 4);
    assert_eq!(sys.equations()[3], poly("1 - t*x - t*y", &vars));

    // Above the critical point (1/2, 1/2), the scaled equation becomes 1 - t:
    // the critical fiber carries exactly the t-value 1.
    let fiber = sys.equations()[3].substitute_values(&[
        Some(rat(1, 2)),
        Some(rat(1, 2)),
        None,
        None,
    ]);
    assert_eq!(fiber, poly("1 - t", &vars));
    let roots = fiber.coeffs_in("t");
    assert_eq!(roots.len(), 2); // degree one: the single root t = 1
    assert_solution(&sys, &[rat(1, 2), rat(1, 2), rat(-1, 2), int(1)]);
}

#[test]
fn extended_system_for_apery_sum_has_six_variables() {
    // Denominator of the rational function whose diagonal carries the Apéry
    // numbers' central binomial-like sum.
    let h = poly(
        "1 - w*(1 + x)*(1 + y)*(1 + z)*(1 + y + z + y*z + x*y*z)",
        &["w", "x", "y", "z"],
    );
    let sys = extended_system(&h).unwrap();
    assert_eq!(sys.variables(), &["w", "x", "y", "z", "lambda", "t"]);
    assert_eq!(sys.equations().len(), 6);
}

#[test]
fn auxiliary_names_avoid_the_input_variables() {
    let sys = extended_system(&poly("1 - t - lambda*t", &["t", "lambda"])).unwrap();
    assert_eq!(sys.variables(), &["t", "lambda", "lambda_", "t_"]);
    // z ∂/∂z equations still reference the right variables.
    let vars = ["t", "lambda", "lambda_", "t_"];
    assert_eq!(
        sys.equations()[1],
        poly("-t - lambda*t - lambda_", &vars)
    );
    assert_eq!(
        sys.equations()[3],
        poly("1 - t*t_ - lambda*t*t_^2", &vars)
    );
}

#[test]
fn stratum_system_of_two_transverse_planes() {
    // Two linear factors meeting transversely; the lone 3×3 minor is the
    // published determinant and the known critical point satisfies everything.
    let vars = ["x", "y", "z"];
    let h1 = poly("1 - 3*x - y - z", &vars);
    let h2 = poly("1 - x - 3*y - z", &vars);
    let fd = FactoredDenominator::new(h1.mul(&h2), vec![h1, h2], vec![1, 1]).unwrap();
    let sys = stratum_system(&fd, &[0, 1]).unwrap();
    assert_eq!(sys.provenance(), &Provenance::Stratum(vec![0, 1]));
    assert_eq!(sys.variables(), &vars);
    assert_eq!(sys.equations().len(), 3);
    assert_eq!(sys.equations()[2], poly("8*x*y - 2*x*z - 2*y*z", &vars));
    assert_solution(&sys, &[rat(1, 6), rat(1, 6), rat(1, 3)]);
}

#[test]
fn stratum_system_of_kernel_and_hyperplane() {
    // A walk kernel factor times 1 - y: two strata points, one per sign of x.
    let vars = ["x", "y", "t"];
    let h1 = poly("1 - t*(1 + x^2 + x*y^2)", &vars);
    let h2 = poly("1 - y", &vars);
    let fd = FactoredDenominator::new(h1.mul(&h2), vec![h1, h2], vec![1, 1]).unwrap();
    let sys = stratum_system(&fd, &[0, 1]).unwrap();
    assert_eq!(sys.equations().len(), 3);
    assert_eq!(sys.equations()[2], poly("t*x^2*y - t*y", &vars));
    assert_solution(&sys, &[int(1), int(1), rat(1, 3)]);
    assert_solution(&sys, &[int(-1), int(1), int(1)]);
}

#[test]
fn stratum_with_all_factors_selected_keeps_only_the_factors() {
    let vars = ["x", "y"];
    let h1 = poly("1 - x - y", &vars);
    let h2 = poly("1 - 2*x - y", &vars);
    let fd = FactoredDenominator::new(h1.mul(&h2), vec![h1.clone(), h2.clone()], vec![1, 1])
        .unwrap();
    let sys = stratum_system(&fd, &[0, 1]).unwrap();
    assert_eq!(sys.equations().len(), 2);
    assert_eq!(sys.equations()[0], h1);
    assert_eq!(sys.equations()[1], h2);
    // The full intersection: x = 0, y = 1.
    assert_solution(&sys, &[int(0), int(1)]);
}

#[test]
fn stratum_single_factor_matches_the_smooth_system() {
    // r = 1 minors are differences of the smooth equations: λ cancels.
    let vars = ["x", "y", "z"];
    let h = poly("1 - x - y - 2*z - x*y*z", &vars);
    let fd = FactoredDenominator::single(&h).unwrap();
    let strat = stratum_system(&fd, &[0]).unwrap();
    let smooth = smooth_system(&h).unwrap();

    let names: Vec<&str> = smooth.variables().iter().map(String::as_str).collect();
    // Minors come in lexicographic column order: (0,1), (0,2), (1,2).
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    assert_eq!(strat.equations().len(), 1 + pairs.len());
    for (minor, (i, j)) in strat.equations()[1..].iter().zip(pairs) {
        let diff = smooth.equations()[1 + i].sub(&smooth.equations()[1 + j]);
        assert_eq!(minor.with_vars(&names), diff);
    }
}

#[test]
fn stratum_subset_errors() {
    let vars = ["x", "y"];
    let h1 = poly("1 - x - y", &vars);
    let h2 = poly("1 - 2*x - y", &vars);
    let h3 = poly("1 - x - 2*y", &vars);
    let fd = FactoredDenominator::new(
        h1.mul(&h2).mul(&h3),
        vec![h1, h2, h3],
        vec![1, 1, 1],
    )
    .unwrap();
    assert!(matches!(
        stratum_system(&fd, &[0, 1, 2]),
        Err(SystemsError::SubsetTooLarge { r: 3, n: 2 })
    ));
    assert!(matches!(
        stratum_system(&fd, &[0, 5]),
        Err(SystemsError::BadFactorIndex { index: 5, count: 3 })
    ));
    assert!(matches!(
        stratum_system(&fd, &[]),
        Err(SystemsError::InvalidSubset)
    ));
    assert!(matches!(
        stratum_system(&fd, &[1, 1]),
        Err(SystemsError::InvalidSubset)
    ));
}

#[test]
fn factored_denominator_certificates() {
    let vars = ["x", "y"];
    let lin = poly("1 - x - y", &vars);
    let square = lin.mul(&lin);

    // A squared factor is rejected.
    assert!(matches!(
        FactoredDenominator::new(square.clone(), vec![square.clone()], vec![1]),
        Err(SystemsError::NotSquareFree(0))
    ));
    // ... but is fine as a square-free factor with multiplicity two.
    let fd = FactoredDenominator::new(square.clone(), vec![lin.clone()], vec![2]).unwrap();
    assert_eq!(fd.multiplicities(), &[2]);

    // Shared factors between entries are rejected.
    let shared = lin.mul(&poly("1 - 2*x", &vars));
    assert!(matches!(
        FactoredDenominator::new(lin.mul(&shared), vec![lin.clone(), shared], vec![1, 1]),
        Err(SystemsError::NotCoprime(0, 1))
    ));

    // The product must rebuild the denominator.
    assert!(matches!(
        FactoredDenominator::new(lin.clone(), vec![poly("1 - 2*x - y", &vars)], vec![1]),
        Err(SystemsError::ProductMismatch)
    ));

    // Structural errors.
    assert!(matches!(
        FactoredDenominator::new(lin.clone(), vec![], vec![]),
        Err(SystemsError::NoFactors)
    ));
    assert!(matches!(
        FactoredDenominator::new(lin.clone(), vec![lin.clone()], vec![1, 2]),
        Err(SystemsError::FactorCountMismatch { .. })
    ));
    assert!(matches!(
        FactoredDenominator::new(lin.clone(), vec![lin.clone()], vec![0]),
        Err(SystemsError::ZeroMultiplicity)
    ));
    assert!(matches!(
        FactoredDenominator::new(lin.clone(), vec![poly("1 - u", &["u"])], vec![1]),
        Err(SystemsError::UnknownVariable(_))
    ));
}

#[test]
fn factored_denominator_tolerates_units_and_scalars() {
    let vars = ["x", "y"];
    let lin = poly("1 - x - y", &vars);
    // Denominator scaled by -3/7 and a monomial: still the same class.
    let scaled = lin.mul(&lin).scale(&rat(-3, 7)).shift_exponents(&[2, 1]);
    let fd = FactoredDenominator::new(scaled, vec![lin.clone()], vec![2]).unwrap();
    assert_eq!(fd.factors(), &[lin]);
}

#[test]
fn split_matches_the_published_worked_example() {
    // H = 8 + w(2z-1)^2, the algebraic (non-combinatorial) bivariate example.
    let h = poly("8 + w*(2*z - 1)^2", &["w", "z"]);
    let (re, im) = complex_split(&h).unwrap();
    let xy = ["x_1", "x_2", "y_1", "y_2"];
    assert_eq!(
        re,
        poly(
            "4*x_1*x_2^2 - 4*x_1*y_2^2 - 8*x_2*y_1*y_2 - 4*x_1*x_2 + 4*y_1*y_2 + x_1 + 8",
            &xy
        )
    );
    assert_eq!(
        im,
        poly(
            "8*x_1*x_2*y_2 + 4*x_2^2*y_1 - 4*y_1*y_2^2 - 4*x_1*y_2 - 4*x_2*y_1 + y_1",
            &xy
        )
    );
}

#[test]
fn general_real_system_reproduces_the_worked_example_equations() {
    let h = poly("8 + w*(2*z - 1)^2", &["w", "z"]);
    let sys = general_real_system(&h, true).unwrap();
    assert_eq!(sys.provenance(), &Provenance::GeneralRealCritical);
    assert_eq!(
        sys.variables(),
        &[
            "a_1", "a_2", "b_1", "b_2", "x_1", "x_2", "y_1", "y_2", "lambda_R", "lambda_I",
            "t", "nu"
        ]
    );
    assert_eq!(sys.equations().len(), 12);
    let names: Vec<&str> = sys.variables().iter().map(String::as_str).collect();

    // The candidate point (w, z) = (-2, -1/2) is real: a = (-2, -1/2), b = 0.
    // Its gradient value is real too: lambda_R = -8, lambda_I = 0.
    let mut point = vec![Rat::zero(); names.len()];
    point[0] = int(-2);
    point[1] = rat(-1, 2);
    point[8] = int(-8);
    // Equations 0..6 are the critical-point block in (a, b): all vanish there.
    for eq in &sys.equations()[..6] {
        assert!(eq.eval(&point).is_zero(), "{}", eq.pretty_print());
    }

    // Substituting the candidate into the modulus-comparison block yields the
    // published equations x_1^2 + y_1^2 - 4t and x_2^2 + y_2^2 - t/4.
    let vals: Vec<Option<Rat>> = names
        .iter()
        .map(|v| match *v {
            "a_1" => Some(int(-2)),
            "a_2" => Some(rat(-1, 2)),
            "b_1" | "b_2" => Some(Rat::zero()),
            _ => None,
        })
        .collect();
    assert_eq!(
        sys.equations()[8].substitute_values(&vals),
        poly("x_1^2 + y_1^2 - 4*t", &names)
    );
    assert_eq!(
        sys.equations()[9].substitute_values(&vals),
        poly("x_2^2 + y_2^2 - t/4", &names)
    );

    // The rotation-multiplier equations match the published pair verbatim.
    assert_eq!(
        sys.equations()[10],
        poly(
            "(-nu*x_1 + y_1)*(4*x_2^2 - 4*y_2^2 - 4*x_2 + 1) - (nu*y_1 + x_1)*(-8*x_2*y_2 + 4*y_2)",
            &names
        )
    );
    assert_eq!(
        sys.equations()[11],
        poly(
            "(-nu*x_2 + y_2)*(8*x_1*x_2 - 8*y_1*y_2 - 4*x_1) - (nu*y_2 + x_2)*(-8*x_1*y_2 - 8*x_2*y_1 + 4*y_1)",
            &names
        )
    );
}

#[test]
fn general_real_system_for_real_linear_polynomials() {
    // Real-linear H: the imaginary part has no constant term and the
    // imaginary critical equations force lambda_I = 0 at real points.
    let h = poly("3 + 2*x - 5*y", &["x", "y"]);
    let (_, im) = complex_split(&h).unwrap();
    assert!(im.constant_term().is_zero());
    assert_eq!(im, poly("2*y_1 - 5*y_2", &["x_1", "x_2", "y_1", "y_2"]));

    let sys = general_real_system(&h, false).unwrap();
    assert_eq!(sys.provenance(), &Provenance::GeneralReal);
    assert_eq!(sys.equations().len(), 10);
    let names: Vec<&str> = sys.variables().iter().map(String::as_str).collect();
    let at_real: Vec<Option<Rat>> = names
        .iter()
        .map(|v| match *v {
            "b_1" | "b_2" => Some(Rat::zero()),
            _ => None,
        })
        .collect();
    // Imaginary critical equations reduce to -lambda_I once b = 0.
    let minus_lambda_i = poly("-lambda_I", &names);
    assert_eq!(sys.equations()[4].substitute_values(&at_real), minus_lambda_i);
    assert_eq!(sys.equations()[5].substitute_values(&at_real), minus_lambda_i);
    // And the imaginary variety equation at (a, b) vanishes identically.
    assert!(sys.equations()[1].substitute_values(&at_real).is_zero());
}

#[test]
fn general_real_solutions_extend_to_the_base_point() {
    // Each critical-block solution extends by (x, y, t) = (a, b, 1): the
    // comparison block collapses onto the critical block under substitution.
    for (text, vars) in [
        ("2 + y - x*(1 + y)^2", vec!["x", "y"]),
        ("8 + w*(2*z - 1)^2", vec!["w", "z"]),
    ] {
        let h = poly(text, &vars);
        let n = vars.len();
        let sys = general_real_system(&h, false).unwrap();
        let names: Vec<&str> = sys.variables().iter().map(String::as_str).collect();

        let identify = |p: &LaurentPoly| -> LaurentPoly {
            let mut q = p.clone();
            for j in 1..=n {
                let mut mono = vec![0i64; names.len()];
                mono[j - 1] = 1; // a_j
                q = q.substitute_monomial(&format!("x_{j}"), &int(1), &mono);
                let mut mono = vec![0i64; names.len()];
                mono[n + j - 1] = 1; // b_j
                q = q.substitute_monomial(&format!("y_{j}"), &int(1), &mono);
            }
            let t_one: Vec<Option<Rat>> = names
                .iter()
                .map(|v| if *v == "t" { Some(int(1)) } else { None })
                .collect();
            q.substitute_values(&t_one)
        };

        // Variety equations at (x, y) become the variety equations at (a, b).
        assert_eq!(identify(&sys.equations()[2 + 2 * n]), sys.equations()[0]);
        assert_eq!(identify(&sys.equations()[3 + 2 * n]), sys.equations()[1]);
        // Modulus comparisons vanish identically at t = 1.
        for j in 0..n {
            assert!(identify(&sys.equations()[4 + 2 * n + j]).is_zero());
        }
    }
}

#[test]
fn serialization_round_trips_every_provenance() {
    let vars = ["x", "y"];
    let h = poly("1 - x - y^2", &vars);
    let fd = FactoredDenominator::single(&h).unwrap();
    let systems = vec![
        smooth_system(&h).unwrap(),
        extended_system(&h).unwrap(),
        stratum_system(&fd, &[0]).unwrap(),
        general_real_system(&h, false).unwrap(),
        general_real_system(&h, true).unwrap(),
    ];
    for sys in systems {
        let back = PolySystem::from_text(&sys.to_text()).unwrap();
        assert_eq!(back, sys);
    }
}
