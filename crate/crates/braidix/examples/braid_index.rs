//! Braid index criteria on 13_9465: the tenth-root Jones test beats the
//! MWF inequality here, pinning the braid index at 4.

use braidix::criteria::{mwf_bound, report_for_invariants, unity_root_test, ReportOptions};
use braidix::tables;

fn main() {
    let p = tables::p_13_9465();
    let v = tables::v_13_9465();

    println!("MWF bound from the v-span: {}", mwf_bound(&p).unwrap());

    let three = unity_root_test(&v, 3, 10).unwrap();
    println!(
        "|V(e^(2pi i/10))| = {:.6} vs (2 cos pi/10)^2 = {:.6}: 3 strands excluded: {}",
        three.value, three.bound, three.excluded
    );
    let four = unity_root_test(&v, 4, 10).unwrap();
    println!(
        "|V(e^(2pi i/10))| = {:.6} vs (2 cos pi/10)^3 = {:.6}: 4 strands excluded: {}",
        four.value, four.bound, four.excluded
    );

    let report = report_for_invariants(&p, &v, None, &ReportOptions::default()).unwrap();
    println!("\nfull report:\n{}", report.render());
}
