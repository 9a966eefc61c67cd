use smallsub::acceptance::criteria;
use smallsub_core::groebner::Budget;

#[test]
fn acceptance_suite() {
    let budget = Budget::default();
    let results: Vec<_> = criteria().iter().map(|c| c.run(&budget)).collect();
    for r in &results {
        println!("{}", r.line(true));
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    println!("{}/{} criteria pass", results.len() - failed.len(), results.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
