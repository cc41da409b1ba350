use std::collections::BTreeSet;

use super::*;

#[test]
fn ids_are_unique_and_topics_known() {
    let all = claims();
    let ids: BTreeSet<&str> = all.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), all.len());
    for c in &all {
        assert!(TOPICS.contains(&c.topic()), "{}", c.id);
        assert!(!c.reference.is_empty());
    }
    for t in TOPICS {
        assert!(all.iter().any(|c| c.topic() == *t), "empty topic {t}");
    }
}

#[test]
fn unknown_topic_is_an_error() {
    assert_eq!(
        verify_claims(&["nonsense".to_string()]),
        Err(ClaimError::UnknownTopic("nonsense".into()))
    );
}

#[test]
fn topic_selection() {
    let sel = select(&["symmetries".to_string(), "weyl".to_string()]).unwrap();
    assert!(sel.iter().all(|c| c.topic() == "symmetries" || c.topic() == "weyl"));
    assert_eq!(select(&[]).unwrap().len(), claims().len());
}

#[test]
fn findings_keep_the_worse_verdict() {
    let ok = Finding::new(ClaimVerdict::Verified, "a");
    let bad = Finding::new(ClaimVerdict::Refuted, "b");
    let f = ok.clone().and(bad);
    assert_eq!(f.verdict, ClaimVerdict::Refuted);
    assert_eq!(f.detail, "a; b");
    let g = ok.and(Finding::new(ClaimVerdict::ConsistentWithClaim, "c"));
    assert_eq!(g.verdict, ClaimVerdict::Verified);
}

#[test]
fn verdicts_serialize_in_kebab_case() {
    assert_eq!(
        serde_json::to_string(&ClaimVerdict::FiniteDimensionCertified).unwrap(),
        "\"finite-dimension-certified\""
    );
    assert!(ClaimVerdict::Error.is_failure());
    assert!(!ClaimVerdict::Inconclusive.is_failure());
}

#[test]
fn every_claim_passes() {
    let report = verify_claims(&[]).unwrap();
    for e in &report.entries {
        println!("{:<40} {:<26} {:>6} ms  {}", e.claim_id, e.verdict, e.millis, e.detail);
    }
    let ids: Vec<&str> = report.entries.iter().map(|e| e.claim_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let bad: Vec<&ClaimEntry> = report
        .entries
        .iter()
        .filter(|e| e.verdict.is_failure() || e.verdict == ClaimVerdict::Inconclusive)
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let topics = vec!["symmetries".to_string(), "parameters".to_string()];
    let run = |n| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        let r = pool.install(|| verify_claims(&topics)).unwrap();
        r.entries
            .into_iter()
            .map(|e| (e.claim_id, e.verdict, e.detail))
            .collect::<Vec<_>>()
    };
    assert_eq!(run(1), run(4));
}
