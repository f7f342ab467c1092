//! Randomized invariants: rationals with denominators up to 200, stages up
//! to 8 (lower where the stage size grows like K^n). Shared by the
//! `properties` and `acceptance` targets.

use cantor::analysis::{gap_statistics, thickness_proxy, translate_intersection};
use cantor::family::digit_expansions;
use cantor::measure::{cdf_bounds, cylinder_mass, MeasureTree, WeightVector};
use cantor::verify::{compare_stages, in_limit_set};
use cantor::{ClosedInterval, DigitIfs, FamilySpec, Gamma1, Gamma2, Gamma2Formula, Gamma3, GapList, IntervalSet, OpenInterval, Rational};
use num::{BigInt, Signed};
use proptest::prelude::*;

pub const CASES: u32 = 256;

// counterexamples are printed on failure; no regression files
fn config() -> ProptestConfig {
    ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::with_cases(CASES)
    }
}

fn rational(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Rational> {
    (1i64..=200, range).prop_map(|(den, scale)| Rational::make(scale % (den * 3 + 1), den).unwrap())
}

/// Rational in [0,1] with denominator <= 200.
fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=200).prop_flat_map(|den| (0..=den).prop_map(move |num| Rational::make(num, den).unwrap()))
}

fn interval() -> impl Strategy<Value = ClosedInterval> {
    (unit_rational(), unit_rational()).prop_map(|(a, b)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        ClosedInterval::new(lo, hi).unwrap()
    })
}

fn interval_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec(interval(), 0..8).prop_map(IntervalSet::normalize)
}

fn gamma3() -> impl Strategy<Value = Gamma3> {
    (3u32..=200)
        .prop_flat_map(|q| (1..=q / 3, Just(q)))
        .prop_map(|(p, q)| {
            let g = num::integer::gcd(p, q);
            Gamma3::new(p / g, q / g).unwrap()
        })
}

/// Digit IFS with base <= 5, so stage sets stay small.
fn small_digit_ifs() -> impl Strategy<Value = DigitIfs> {
    (2u32..=5)
        .prop_flat_map(|base| (Just(base), prop::collection::btree_set(0..base, 2..=base as usize)))
        .prop_map(|(base, digits)| DigitIfs::new(base, digits.into_iter().collect()).unwrap())
}

/// Digit IFS whose alphabet is closed under d -> base-1-d.
fn symmetric_digit_ifs() -> impl Strategy<Value = DigitIfs> {
    (2u32..=6)
        .prop_flat_map(|base| (Just(base), prop::collection::btree_set(0..base, 1..=base as usize)))
        .prop_filter_map("needs two digits", |(base, half)| {
            let mut digits: Vec<u32> = half.iter().flat_map(|&d| [d, base - 1 - d]).collect();
            digits.sort_unstable();
            digits.dedup();
            DigitIfs::new(base, digits).ok()
        })
}

fn thin_family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1u32..=3).prop_map(|h| Gamma1::new(2 * h + 1).unwrap().into()),
        (3u32..=6).prop_map(|q| Gamma2::new(q).unwrap().into()),
    ]
}

fn any_family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        thin_family(),
        gamma3().prop_map(FamilySpec::from),
        small_digit_ifs().prop_map(FamilySpec::from),
    ]
}

/// Stage limit keeping components (`count^n`) and gap-formula gaps (`q^n`)
/// below a few thousand.
fn stage_cap(spec: &FamilySpec) -> u32 {
    let gap_base = match spec {
        FamilySpec::Gamma1(g) => g.q(),
        FamilySpec::Gamma2(g) => g.q(),
        _ => 2,
    };
    let by_gaps = (1..=8).take_while(|&n| gap_base.pow(n) <= 6561).last().unwrap_or(1);
    by_gaps.min(match spec.map_count() {
        0..=2 => 8,
        3 => 6,
        4 => 5,
        _ => 4,
    })
}

fn weights(count: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(1i64..=20, count).prop_map(|raw| {
        let total: i64 = raw.iter().sum();
        WeightVector::new(raw.iter().map(|&w| Rational::make(w, total).unwrap()).collect()).unwrap()
    })
}

fn is_canonical(s: &IntervalSet) -> bool {
    s.intervals().windows(2).all(|w| w[0].hi() < w[1].lo()) && s.iter().all(|iv| iv.lo() <= iv.hi())
}

// ---- exact numbers ----

proptest! {
    #![proptest_config(config())]

    fn rationals_stay_reduced(a in rational(-600..=600), b in rational(-600..=600)) {
        let mut results = vec![&a + &b, &a - &b, &a * &b, a.pow(3)];
        if !b.is_zero() {
            results.push(a.checked_div(&b).unwrap());
        }
        for v in results {
            prop_assert!(v.denom().is_positive());
            prop_assert_eq!(num::integer::gcd(v.numer().abs(), v.denom().clone()), BigInt::from(1));
            if v.is_zero() {
                prop_assert_eq!(v.denom(), &BigInt::from(1));
            }
        }
    }

    fn field_axioms(a in rational(-600..=600), b in rational(-600..=600), c in rational(-600..=600)) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * a.recip().unwrap(), Rational::one());
        }
    }

    fn ordering_matches_sign_of_difference(a in rational(-600..=600), b in rational(-600..=600)) {
        let diff = &a - &b;
        prop_assert_eq!(a.cmp(&b), diff.numer().sign().cmp(&num::bigint::Sign::NoSign));
    }

    fn text_round_trip(a in rational(-600..=600)) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }
}

// ---- interval algebra ----

proptest! {
    #![proptest_config(config())]

    fn normalize_is_canonical(raw in prop::collection::vec(interval(), 0..10), seed in any::<u64>()) {
        let a = IntervalSet::normalize(raw.clone());
        let mut shuffled = raw;
        let len = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        prop_assert!(is_canonical(&a));
        prop_assert_eq!(&a, &IntervalSet::normalize(shuffled));
        prop_assert_eq!(IntervalSet::normalize(a.intervals().to_vec()), a);
    }

    fn gap_round_trip(cuts in prop::collection::btree_set(1i64..200, 0..12)) {
        // consecutive pairs of distinct sorted cuts never touch
        let points: Vec<i64> = cuts.into_iter().collect();
        let gaps: Vec<OpenInterval> = points
            .chunks_exact(2)
            .map(|pair| OpenInterval::new(Rational::make(pair[0], 200).unwrap(), Rational::make(pair[1], 200).unwrap()).unwrap())
            .collect();
        let gaps = GapList::new(gaps);
        let removed = IntervalSet::unit().subtract_gaps(&gaps);
        prop_assert_eq!(removed.gaps_within(&ClosedInterval::unit()).unwrap(), gaps);
    }

    fn intersection_laws(a in interval_set(), b in interval_set(), c in interval_set()) {
        let ab = a.intersect(&b);
        prop_assert!(is_canonical(&ab));
        prop_assert_eq!(&ab, &b.intersect(&a));
        prop_assert_eq!(ab.intersect(&c), a.intersect(&b.intersect(&c)));
        prop_assert_eq!(a.intersect(&a), a.clone());
        prop_assert!(ab.total_length() <= a.total_length().min(b.total_length()));
        prop_assert!(ab.is_subset_of(&a) && ab.is_subset_of(&b));
    }

    fn translation_preserves_length(a in interval_set(), t in rational(-400..=400)) {
        let moved = a.translate(&t);
        prop_assert_eq!(moved.total_length(), a.total_length());
        prop_assert_eq!(moved.translate(&-&t), a);
    }

    fn membership_agrees_with_components(a in interval_set(), x in unit_rational()) {
        let linear = a.iter().any(|iv| iv.contains(&x));
        prop_assert_eq!(a.contains_point(&x), linear);
    }
}

// ---- families ----

proptest! {
    #![proptest_config(config())]

    fn closed_forms_match_recursion(spec in gamma3(), n in 0u32..=8) {
        let table = spec.endpoints(n);
        let length = spec.interval_length(n);
        prop_assert_eq!(table.rows.len(), 1usize << n);
        for row in &table.rows {
            prop_assert_eq!(&row.b - &row.a, length.clone());
        }
        if n >= 1 {
            prop_assert_eq!(spec.delta(n).unwrap(), &length + &spec.alpha().pow(n));
        }
        prop_assert_eq!(&table.rows[0].a, &Rational::zero());
        prop_assert_eq!(&table.rows.last().unwrap().b, &Rational::one());
        for w in table.rows.windows(2) {
            prop_assert!(w[0].b < w[1].a);
        }
    }

    fn measure_is_conserved(spec in gamma3(), n in 0u32..=8) {
        let stage = spec.endpoints(n).stage_set();
        let removed: Rational = (1..=n)
            .map(|m| Rational::integer(1i64 << (m - 1)) * spec.alpha().pow(m))
            .sum();
        prop_assert_eq!(&removed, &spec.removed_length(n));
        prop_assert_eq!(stage.total_length() + removed, Rational::one());
        prop_assert!(stage.total_length() >= spec.measure());
    }

    fn recursion_matches_nested_construction(spec in gamma3(), n in 0u32..=8) {
        prop_assert_eq!(spec.endpoints(n).stage_set(), spec.nested_stage(n).unwrap());
    }

    fn stages_are_nested(spec in any_family(), n in 0u32..=8) {
        let n = n.min(stage_cap(&spec) - 1);
        let outer = spec.stage(n).unwrap();
        let inner = spec.stage(n + 1).unwrap();
        prop_assert!(inner.is_subset_of(&outer), "{spec} n={n}");
    }

    fn every_representation_is_nested(g3 in gamma3(), q in 3u32..=6, h in 1u32..=3, n in 0u32..=7) {
        let g2 = Gamma2::new(q).unwrap();
        let g1 = Gamma1::new(2 * h + 1).unwrap();
        let n_thin = n.min(if q > 4 { 4 } else { 6 });
        let pairs = [
            (g3.nested_stage(n).unwrap(), g3.nested_stage(n + 1).unwrap()),
            (g3.endpoints(n).stage_set(), g3.endpoints(n + 1).stage_set()),
            (
                g2.stage_with(n_thin, Gamma2Formula::ConjecturedCorrection).unwrap(),
                g2.stage_with(n_thin + 1, Gamma2Formula::ConjecturedCorrection).unwrap(),
            ),
            (g2.digit_ifs().stage(n_thin), g2.digit_ifs().stage(n_thin + 1)),
            (g1.digit_ifs().stage(n_thin.min(4)), g1.digit_ifs().stage(n_thin.min(4) + 1)),
            (g1.stage(n_thin.min(4)).unwrap(), g1.stage(n_thin.min(4) + 1).unwrap()),
        ];
        for (i, (outer, inner)) in pairs.iter().enumerate() {
            prop_assert!(inner.is_subset_of(outer), "representation {i} at n={n}");
        }
    }

    fn stages_are_symmetric(spec in prop_oneof![
        // the printed Γ2 gap formula is asymmetric for q >= 4, see verify_gamma2_formula
        (1u32..=3).prop_map(|h| FamilySpec::from(Gamma1::new(2 * h + 1).unwrap())),
        Just(FamilySpec::from(Gamma2::new(3).unwrap())),
        (3u32..=6).prop_map(|q| FamilySpec::from(Gamma2::new(q).unwrap().digit_ifs())),
        gamma3().prop_map(FamilySpec::from),
        symmetric_digit_ifs().prop_map(FamilySpec::from),
    ], n in 0u32..=8) {
        let n = n.min(stage_cap(&spec));
        let stage = spec.stage(n).unwrap();
        prop_assert_eq!(stage.reflect(), stage);
    }

    fn stage_endpoints_have_admissible_expansions(spec in prop_oneof![
        (1u32..=3).prop_map(|h| FamilySpec::from(Gamma1::new(2 * h + 1).unwrap())),
        Just(FamilySpec::from(Gamma2::new(3).unwrap())),
        (3u32..=6).prop_map(|q| FamilySpec::from(Gamma2::new(q).unwrap().digit_ifs())),
        small_digit_ifs().prop_map(FamilySpec::from),
    ], n in 0u32..=8) {
        let n = n.min(stage_cap(&spec));
        let digits = spec.digit_ifs().unwrap();
        for iv in &spec.stage(n).unwrap() {
            for e in [iv.lo(), iv.hi()] {
                let prefixes = digit_expansions(e, digits.base(), n as usize).unwrap();
                prop_assert!(prefixes.iter().any(|p| digits.accepts_prefix(p)), "{spec} n={n} e={e}");
            }
        }
    }

    fn digit_stage_intervals_have_stage_width(spec in small_digit_ifs(), n in 0u32..=4) {
        let width = Rational::from(spec.base()).pow(n).recip().unwrap();
        let stage = spec.stage(n);
        for iv in &stage {
            prop_assert!(iv.length() >= width);
        }
        prop_assert!(stage.total_length() <= Rational::from(spec.alphabet().len() as u32) .pow(n) * &width);
    }
}

// ---- verification oracle ----

proptest! {
    #![proptest_config(config())]

    fn comparison_reports_are_sound(a in interval_set(), b in interval_set()) {
        let report = compare_stages(&a, &b);
        prop_assert_eq!(report.equal, a == b);
        prop_assert_eq!(report.equal, report.left_minus_right.is_empty() && report.right_minus_left.is_empty());
        if report.equal {
            prop_assert_eq!(a.total_length(), b.total_length());
            prop_assert!(report.witness.is_none());
        } else {
            let w = report.witness.unwrap();
            prop_assert!(a.contains_point(&w) != b.contains_point(&w), "witness {w}");
        }
        prop_assert!(report.left_minus_right.is_subset_of(&a));
        prop_assert!(report.right_minus_left.is_subset_of(&b));
    }

    fn limit_members_lie_in_every_stage(spec in small_digit_ifs(), x in unit_rational()) {
        if in_limit_set(&spec, &x) {
            let cap = match spec.alphabet().len() { 2 => 12, 3 => 7, 4 => 6, _ => 5 };
            for n in 0..=cap {
                prop_assert!(spec.stage(n).contains_point(&x), "n={n}");
            }
        }
    }

    fn middle_third_members_lie_in_stage_twelve(x in unit_rational()) {
        let cantor = DigitIfs::new(3, vec![0, 2]).unwrap();
        if in_limit_set(&cantor, &x) {
            prop_assert!(cantor.stage(12).contains_point(&x));
        }
    }
}

// ---- staircase measures ----

fn tree_and_weights() -> impl Strategy<Value = (MeasureTree, WeightVector)> {
    prop_oneof![
        small_digit_ifs().prop_map(MeasureTree::from),
        gamma3().prop_map(MeasureTree::from),
    ]
    .prop_flat_map(|tree| {
        let k = tree.map_count();
        (Just(tree), weights(k))
    })
}

proptest! {
    #![proptest_config(config())]

    fn cylinder_masses_sum_to_one((tree, w) in tree_and_weights(), n in 0u32..=12) {
        let n = match tree.map_count() { 2 => n, 3 => n.min(7), 4 => n.min(6), _ => n.min(5) };
        let total: Rational = tree
            .addresses(n)
            .iter()
            .map(|a| cylinder_mass(&tree, &w, a).unwrap())
            .sum();
        prop_assert_eq!(total, Rational::one());
    }

    fn brackets_are_tight_and_nested((tree, w) in tree_and_weights(), x in unit_rational(), n in 0u32..=8) {
        let coarse = cdf_bounds(&tree, &w, &x, n).unwrap();
        let fine = cdf_bounds(&tree, &w, &x, n + 1).unwrap();
        prop_assert!(Rational::zero() <= coarse.lower && coarse.lower <= coarse.upper && coarse.upper <= Rational::one());
        prop_assert!(coarse.width() <= w.max_weight().pow(n));
        prop_assert!(coarse.lower <= fine.lower && fine.upper <= coarse.upper);
    }

    fn lower_envelope_is_monotone((tree, w) in tree_and_weights(), x in unit_rational(), y in unit_rational(), n in 0u32..=8) {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        let bx = cdf_bounds(&tree, &w, &x, n).unwrap();
        let by = cdf_bounds(&tree, &w, &y, n).unwrap();
        prop_assert!(bx.lower <= by.lower && bx.upper <= by.upper);
    }

    fn symmetric_cdf(spec in symmetric_digit_ifs(), raw in prop::collection::vec(1i64..=20, 1..=3), x in unit_rational(), n in 0u32..=8) {
        let k = spec.alphabet().len();
        // palindromic weights of the right length
        let mut raw_full: Vec<i64> = (0..k).map(|i| raw[i.min(k - 1 - i) % raw.len()]).collect();
        for i in 0..k {
            raw_full[k - 1 - i] = raw_full[i];
        }
        let total: i64 = raw_full.iter().sum();
        let w = WeightVector::new(raw_full.iter().map(|&v| Rational::make(v, total).unwrap()).collect()).unwrap();
        let tree = MeasureTree::from(spec);
        let at_x = cdf_bounds(&tree, &w, &x, n).unwrap();
        let mirrored = cdf_bounds(&tree, &w, &(Rational::one() - &x), n).unwrap();
        prop_assert_eq!(at_x.lower + mirrored.upper, Rational::one());
    }

    fn cdf_constant_on_gaps((tree, w) in tree_and_weights(), n in 1u32..=5, pick in any::<prop::sample::Index>(), t in unit_rational()) {
        let stage: IntervalSet = tree
            .addresses(n)
            .iter()
            .map(|a| tree.cylinder(a).unwrap())
            .collect();
        let gaps = stage.gaps_within(&ClosedInterval::unit()).unwrap();
        if !gaps.is_empty() {
            let gap = &gaps.gaps()[pick.index(gaps.len())];
            let inside = gap.lo() + &(&t * &gap.length());
            let at_lo = cdf_bounds(&tree, &w, gap.lo(), n).unwrap();
            for y in [gap.hi().clone(), inside] {
                let b = cdf_bounds(&tree, &w, &y, n).unwrap();
                prop_assert_eq!((&b.lower, &b.upper), (&at_lo.lower, &at_lo.upper));
            }
            prop_assert!(at_lo.is_exact());
        }
    }
}

// ---- fractal analysis ----

proptest! {
    #![proptest_config(config())]

    fn gap_statistics_balance(spec in any_family(), n in 0u32..=8) {
        let n = n.min(stage_cap(&spec));
        let stage = spec.stage(n).unwrap();
        let stats = gap_statistics(&stage, &ClosedInterval::unit()).unwrap();
        prop_assert_eq!(&stats.total_gap + &stage.total_length(), Rational::one());
        prop_assert_eq!(stats.count, stats.histogram.iter().map(|b| b.multiplicity).sum::<usize>());
        let weighted: Rational = stats
            .histogram
            .iter()
            .map(|b| &b.length * &Rational::from(b.multiplicity as u32))
            .sum();
        prop_assert_eq!(weighted, stats.total_gap);
    }

    fn thickness_is_translation_and_reflection_invariant(spec in any_family(), n in 1u32..=8, t in rational(-400..=400)) {
        let n = n.min(stage_cap(&spec));
        let stage = spec.stage(n).unwrap();
        let unit = ClosedInterval::unit();
        if stage.len() >= 2 {
            let base = thickness_proxy(&stage, &unit).unwrap();
            let moved = thickness_proxy(&stage.translate(&t), &unit.translate(&t)).unwrap();
            let mirrored = thickness_proxy(&stage.reflect(), &unit).unwrap();
            prop_assert_eq!(&base, &moved);
            prop_assert_eq!(&base, &mirrored);
        }
    }

    fn intersection_swap_symmetry(a in any_family(), b in any_family(), t in rational(-400..=400), n in 0u32..=8) {
        let n = n.min(stage_cap(&a)).min(stage_cap(&b));
        let forward = translate_intersection(&a, &b, &t, n).unwrap();
        let backward = translate_intersection(&b, &a, &-&t, n).unwrap();
        prop_assert_eq!(&forward.length, &backward.length);
        prop_assert_eq!(backward.set.translate(&t), forward.set);
    }

    fn intersection_shrinks_with_stage(a in any_family(), b in any_family(), t in rational(-400..=400), n in 0u32..=8) {
        let n = n.min(stage_cap(&a) - 1).min(stage_cap(&b) - 1);
        let coarse = translate_intersection(&a, &b, &t, n).unwrap();
        let fine = translate_intersection(&a, &b, &t, n + 1).unwrap();
        prop_assert!(fine.length <= coarse.length);
    }
}

/// Every suite by name; each panics on the first counterexample.
pub const SUITES: &[(&str, fn())] = &[
    ("rationals_stay_reduced", rationals_stay_reduced),
    ("field_axioms", field_axioms),
    ("ordering_matches_sign_of_difference", ordering_matches_sign_of_difference),
    ("text_round_trip", text_round_trip),
    ("normalize_is_canonical", normalize_is_canonical),
    ("gap_round_trip", gap_round_trip),
    ("intersection_laws", intersection_laws),
    ("translation_preserves_length", translation_preserves_length),
    ("membership_agrees_with_components", membership_agrees_with_components),
    ("closed_forms_match_recursion", closed_forms_match_recursion),
    ("measure_is_conserved", measure_is_conserved),
    ("recursion_matches_nested_construction", recursion_matches_nested_construction),
    ("stages_are_nested", stages_are_nested),
    ("every_representation_is_nested", every_representation_is_nested),
    ("stages_are_symmetric", stages_are_symmetric),
    ("stage_endpoints_have_admissible_expansions", stage_endpoints_have_admissible_expansions),
    ("digit_stage_intervals_have_stage_width", digit_stage_intervals_have_stage_width),
    ("comparison_reports_are_sound", comparison_reports_are_sound),
    ("limit_members_lie_in_every_stage", limit_members_lie_in_every_stage),
    ("middle_third_members_lie_in_stage_twelve", middle_third_members_lie_in_stage_twelve),
    ("cylinder_masses_sum_to_one", cylinder_masses_sum_to_one),
    ("brackets_are_tight_and_nested", brackets_are_tight_and_nested),
    ("lower_envelope_is_monotone", lower_envelope_is_monotone),
    ("symmetric_cdf", symmetric_cdf),
    ("cdf_constant_on_gaps", cdf_constant_on_gaps),
    ("gap_statistics_balance", gap_statistics_balance),
    ("thickness_is_translation_and_reflection_invariant", thickness_is_translation_and_reflection_invariant),
    ("intersection_swap_symmetry", intersection_swap_symmetry),
    ("intersection_shrinks_with_stage", intersection_shrinks_with_stage),
];
