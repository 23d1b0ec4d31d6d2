mod common;

use std::fs;

use common::{cases, collapse_ws, fixture, run, verbalize_args};

fn loose(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .flat_map(char::to_lowercase)
        .collect()
}

#[test]
fn golden_text_matches_ignoring_case_and_spacing() {
    let cases = cases();
    assert_eq!(cases.len(), 13);
    for case in &cases {
        let r = run(&verbalize_args(case));
        assert_eq!(r.code, 0, "{}: {}", case.name, r.err);
        assert_eq!(loose(&r.out), loose(&case.expected), "{}", case.name);
    }
}

#[test]
fn golden_text_is_deterministic() {
    for case in cases() {
        assert_eq!(run(&verbalize_args(&case)).out, run(&verbalize_args(&case)).out);
    }
}

#[test]
fn batch_output_concatenates_single_runs() {
    let ontology = fixture("clinical/kidney_graft_material.ofs");
    let lexicon = fixture("clinical/kidney_graft_material.tsv");
    let all = run(&[
        "verbalize",
        "--ontology",
        &ontology,
        "--lexicon",
        &lexicon,
        "--class",
        "all",
    ]);
    assert_eq!(all.code, 0);

    let classes: Vec<String> = fs::read_to_string(&ontology)
        .unwrap()
        .lines()
        .filter_map(|l| {
            l.trim()
                .strip_prefix("Declaration(Class(")?
                .strip_suffix("))")
                .map(str::to_string)
        })
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    assert!(classes.len() > 1);
    let expected: Vec<String> = classes
        .iter()
        .map(|c| {
            let one = run(&[
                "verbalize",
                "--ontology",
                &ontology,
                "--lexicon",
                &lexicon,
                "--class",
                c,
            ]);
            format!("{c}\n{}", one.out)
        })
        .collect();
    assert_eq!(all.out, expected.join("\n"));
}

#[test]
fn class_list_selects_and_sorts() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("classes.txt");
    fs::write(
        &list,
        "# wanted\n:TransplantOfTheKidney\n\n:KidneyGraftMaterial\n:KidneyGraftMaterial\n",
    )
    .unwrap();
    let ontology = fixture("clinical/kidney_graft_material.ofs");
    let r = run(&[
        "verbalize",
        "--ontology",
        &ontology,
        "--class-list",
        list.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let heads: Vec<&str> = r.out.lines().filter(|l| l.starts_with(':')).collect();
    assert_eq!(heads, [":KidneyGraftMaterial", ":TransplantOfTheKidney"]);
}

#[test]
fn empty_ontology_all_classes_prints_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.ofs");
    fs::write(&path, "Ontology()\n").unwrap();
    let r = run(&[
        "verbalize",
        "--ontology",
        path.to_str().unwrap(),
        "--class",
        "all",
    ]);
    assert_eq!((r.code, r.out.as_str()), (0, ""));
}

#[test]
fn rst_debug_precedes_paragraph() {
    let case = cases()
        .into_iter()
        .find(|c| c.name == "intracranial_procedure")
        .unwrap();
    let mut args = verbalize_args(&case);
    args.push("--rst-debug".into());
    let r = run(&args);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.out.lines().collect();
    assert!(lines[0].starts_with("Nucleus"), "{}", r.out);
    assert!(
        r.out
            .contains("Satellite Elaboration complex-direct [Additionally]"),
        "{}",
        r.out
    );
    assert_eq!(collapse_ws(lines.last().unwrap()), collapse_ws(&case.expected));
}

#[test]
fn records_format_is_json_lines() {
    let case = cases().into_iter().find(|c| c.name == "graft").unwrap();
    let mut args = verbalize_args(&case);
    args.extend([
        "--format".to_string(),
        "records".to_string(),
        "--rst-debug".to_string(),
    ]);
    let r = run(&args);
    assert_eq!(r.code, 0);
    assert!(r.err.contains("Nucleus"));
    let records: Vec<serde_json::Value> = r.out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!records.is_empty());
    for (i, rec) in records.iter().enumerate() {
        assert_eq!(rec["class"], case.class.as_str());
        assert_eq!(rec["index"], i);
        assert!(rec["groups"].as_array().is_some_and(|g| !g.is_empty()));
    }
    let joined: String = records
        .iter()
        .map(|r| r["text"].as_str().unwrap())
        .collect::<Vec<_>>()
        .join(" ");
    assert_eq!(loose(&joined), loose(&case.expected));
}

#[test]
fn lexicon_comes_from_environment() {
    let case = cases()
        .into_iter()
        .find(|c| c.name == "degenerative_disorder")
        .unwrap();
    let mut args = verbalize_args(&case);
    args.drain(3..5);
    let without = run(&args);
    std::env::set_var(paraverb_cli::LEXICON_ENV, fixture(&case.lexicon));
    let with = run(&args);
    std::env::remove_var(paraverb_cli::LEXICON_ENV);
    assert_eq!(loose(&with.out), loose(&case.expected));
    assert_ne!(with.out, without.out);
}

#[test]
fn unknown_class_exits_two() {
    let r = run(&[
        "verbalize",
        "--ontology",
        &fixture("showcase/travel.ofs"),
        "--class",
        ":Nowhere",
    ]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains(":Nowhere"));
}

#[test]
fn parse_errors_exit_one_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.ofs");
    fs::write(&path, "Ontology(\n  SubClassOf(:A\n").unwrap();
    let r = run(&[
        "verbalize",
        "--ontology",
        path.to_str().unwrap(),
        "--class",
        "all",
    ]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("broken.ofs"), "{}", r.err);
}

#[test]
fn missing_selector_is_a_usage_error() {
    let r = run(&["verbalize", "--ontology", &fixture("showcase/travel.ofs")]);
    assert_eq!(r.code, 2);
    assert!(r.out.is_empty());
}

#[test]
fn version_names_grammar() {
    let r = run(&["--version"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.trim(), "paraverb 0.1.0 (grammar ofs-el/1)");
}

#[test]
fn survey_matches_hand_tally() {
    let r = run(&["survey", &fixture("survey")]);
    assert_eq!(r.code, 0, "{}", r.err);
    let first_table: Vec<&str> = r.out.split("\n\n").next().unwrap().lines().collect();
    assert_eq!(
        first_table,
        [
            "pattern,count,fraction",
            "Sc,4,0.4444",
            "(empty),1,0.1111",
            "CaDc,1,0.1111",
            "Dc,1,0.1111",
            "Ecr,1,0.1111",
            "EcrSc,1,0.1111",
        ]
    );
    assert!(r.err.contains("surveyed 3 files, skipped 0"));
}

#[test]
fn survey_skips_unparseable_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(fixture("survey/taxonomy.ofs"), dir.path().join("a.ofs")).unwrap();
    fs::write(dir.path().join("b.ofs"), "Ontology(SubClassOf(").unwrap();
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let r = run(&["survey", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.err.contains("surveyed 1 files, skipped 1"), "{}", r.err);
    assert!(r.err.contains("b.ofs"));
}

#[test]
fn survey_of_empty_directory_has_headers_only() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["survey", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r
        .out
        .lines()
        .all(|l| l.is_empty() || l.contains(',') && l.chars().next().unwrap().is_lowercase()));
    assert!(r.out.starts_with("pattern,count,fraction\n"));
}

#[test]
fn survey_of_missing_directory_fails() {
    let r = run(&["survey", "/nonexistent/corpus"]);
    assert_eq!(r.code, 1);
}

fn eval(reference: &str, candidate: &str, class: &str, extra: &[&str]) -> common::Output {
    let mut args = vec![
        "eval",
        "--reference",
        reference,
        "--candidate",
        candidate,
        "--class",
        class,
    ];
    args.extend(extra);
    run(&args)
}

#[test]
fn eval_self_is_perfect() {
    for case in cases() {
        let path = fixture(&case.ontology);
        let r = eval(&path, &path, &case.class, &["--mean-only"]);
        assert_eq!((r.code, r.out.trim()), (0, "1.0000"), "{}", case.name);
    }
}

#[test]
fn eval_ignores_conjunct_order() {
    let dir = tempfile::tempdir().unwrap();
    let reference = dir.path().join("r.ofs");
    let candidate = dir.path().join("c.ofs");
    fs::write(
        &reference,
        "Ontology(SubClassOf(:A ObjectIntersectionOf(:B :C :D)))",
    )
    .unwrap();
    fs::write(
        &candidate,
        "Ontology(SubClassOf(:A ObjectIntersectionOf(:D :B))\nSubClassOf(:A :C))",
    )
    .unwrap();
    let r = eval(
        reference.to_str().unwrap(),
        candidate.to_str().unwrap(),
        ":A",
        &[],
    );
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.lines().last().unwrap(), "mean,1.0000");
    assert_eq!(r.out.lines().count(), 4);
}

/// Edit distance by the full Wagner-Fischer table.
fn table_distance(a: &str, b: &str) -> usize {
    let (a, b): (Vec<char>, Vec<char>) = (a.chars().collect(), b.chars().collect());
    let mut t = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = i;
    }
    t[0] = (0..=b.len()).collect();
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = t[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]);
            t[i][j] = sub.min(t[i - 1][j] + 1).min(t[i][j - 1] + 1);
        }
    }
    t[a.len()][b.len()]
}

#[test]
fn eval_recoding_regression() {
    let r = eval(
        &fixture("clinical/intracranial_procedure.ofs"),
        &fixture("eval/intracranial_procedure_recoded.ofs"),
        ":IntracranialProcedure",
        &[],
    );
    assert_eq!(r.code, 0, "{}", r.err);
    let rows: Vec<Vec<String>> = r
        .out
        .lines()
        .skip(1)
        .map(|l| {
            csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .from_reader(l.as_bytes())
                .records()
                .next()
                .unwrap()
                .unwrap()
                .iter()
                .map(str::to_string)
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), 5);
    let imperfect: Vec<&Vec<String>> = rows[..4].iter().filter(|r| r[2] != "1.0000").collect();
    assert_eq!(imperfect.len(), 1);

    let squash = |s: &str| {
        let kept: String = s
            .to_lowercase()
            .chars()
            .filter(|c| c.is_alphanumeric() || c.is_whitespace())
            .collect();
        collapse_ws(&kept)
    };
    let (x, y) = (squash(&imperfect[0][0]), squash(&imperfect[0][1]));
    let longest = x.chars().count().max(y.chars().count()) as f64;
    let sim = (longest - table_distance(&x, &y) as f64) / longest;
    let mean = (3.0 + sim) / 4.0;
    assert_eq!(imperfect[0][2], format!("{sim:.4}"));
    assert_eq!(rows[4], ["mean".to_string(), format!("{mean:.4}")]);
    assert!((mean - 0.9793).abs() < 5e-5, "{mean}");
}

#[test]
fn eval_unknown_class_exits_two() {
    let path = fixture("showcase/travel.ofs");
    assert_eq!(eval(&path, &path, ":Nowhere", &[]).code, 2);
}
