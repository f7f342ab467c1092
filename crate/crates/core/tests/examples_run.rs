//! Every example runs to completion and prints what it promises.

#[allow(dead_code)]
#[path = "../examples/endpoint_tables.rs"]
mod endpoint_tables;
#[allow(dead_code)]
#[path = "../examples/middle_third_equivalence.rs"]
mod middle_third_equivalence;
#[allow(dead_code)]
#[path = "../examples/discrepancy_reports.rs"]
mod discrepancy_reports;
#[allow(dead_code)]
#[path = "../examples/staircase_cdf.rs"]
mod staircase_cdf;
#[allow(dead_code)]
#[path = "../examples/gap_thickness.rs"]
mod gap_thickness;
#[allow(dead_code)]
#[path = "../examples/translation_intersections.rs"]
mod translation_intersections;
#[allow(dead_code)]
#[path = "../examples/dimension.rs"]
mod dimension;
#[allow(dead_code)]
#[path = "../examples/limit_membership.rs"]
mod limit_membership;
#[allow(dead_code)]
#[path = "../examples/interval_algebra.rs"]
mod interval_algebra;

#[test]
fn endpoint_tables_show_both_styles() {
    let out = endpoint_tables::run_example().unwrap();
    assert!(out.contains("k=1  [0, 5/32]  =  [0/16, 2.5/16]"));
    assert!(out.contains("\"[13.5/16,16/16]\""));
}

#[test]
fn middle_third_descriptions_agree() {
    let out = middle_third_equivalence::run_example().unwrap();
    assert!(out.contains("stage 2: {[0,1/9],[2/9,1/3],[2/3,7/9],[8/9,1]}"));
    assert!(out.ends_with("all equal: true\n"));
}

#[test]
fn discrepancies_come_with_witnesses() {
    let out = discrepancy_reports::run_example().unwrap();
    assert!(out.contains("n=1: left-only {[1/2,3/4]} right-only {} witness 5/8"));
    assert!(out.contains("witness 1/12"));
    assert!(out.contains("corrected gaps reproduce the digit set at n=3: true"));
}

#[test]
fn staircase_brackets_collapse_on_gaps() {
    let out = staircase_cdf::run_example().unwrap();
    assert!(out.contains("F(1/3) at n=10: [1/2, 1/2] width 0"));
    assert!(out.contains("F(1/4) at n=10: [341/1024, 171/512] width 1/1024"));
}

#[test]
fn thickness_is_stable_across_stages() {
    let out = gap_thickness::run_example().unwrap();
    assert!(out.contains("n=5: 31 gaps, total 31/64, thickness 3/2"));
}

#[test]
fn sweep_is_symmetric_in_t() {
    let out = translation_intersections::run_example().unwrap();
    assert!(out.contains("length 1/54"));
    assert!(out.contains("-1,4,33043,405000,8\n") && out.contains("\n1,4,33043,405000,8\n"));
}

#[test]
fn dimensions_print() {
    let out = dimension::run_example().unwrap();
    assert!(out.contains("log 2 / log 3 = 0.6309297536"));
    assert!(out.contains("gamma3:p=1,q=4: measure 1/2, dimension 1"));
}

#[test]
fn membership_lists_members() {
    let out = limit_membership::run_example().unwrap();
    assert!(out.contains("1/2: ternary prefixes {[1, 1, 1, 1]}, admissible false"));
    assert!(out.contains(" 1/4 "));
}

#[test]
fn interval_algebra_round_trips() {
    let out = interval_algebra::run_example().unwrap();
    assert!(out.contains("a ∪ b = {[0,3/4]}"));
    assert!(out.contains("gaps back out: {(1/3,2/3)}"));
}
