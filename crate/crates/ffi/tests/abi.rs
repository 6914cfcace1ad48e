use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use trungcd_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    trungcd_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(trungcd_last_error()).to_str().unwrap().to_owned()
}

unsafe fn c5() -> *mut TrungcdGraph {
    let edges: [u32; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    assert_eq!(
        trungcd_graph_from_edges(5, edges.as_ptr(), 5, &mut g),
        TrungcdStatus::Ok
    );
    g
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(trungcd_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn c5_polynomial_and_value() {
    unsafe {
        let g = c5();
        assert_eq!(trungcd_graph_vertex_count(g), 5);
        assert_eq!(trungcd_graph_edge_count(g), 5);
        assert_eq!(trungcd_independence_number(g), 2);

        let mut s = ptr::null_mut();
        assert_eq!(trungcd_ind_poly_json(g, &mut s), TrungcdStatus::Ok);
        assert_eq!(take_string(s), r#"["1","5","5"]"#);

        assert_eq!(trungcd_ind_poly_eval(g, -1, 2, &mut s), TrungcdStatus::Ok);
        assert_eq!(take_string(s), "-1/4");

        assert_eq!(trungcd_ind_poly_eval(g, 1, 0, &mut s), TrungcdStatus::DomainError);

        let mut verdict = 99;
        assert_eq!(trungcd_is_gorenstein(g, &mut verdict), TrungcdStatus::Ok);
        assert_eq!(verdict, TRUNGCD_VERDICT_TRUE);
        trungcd_graph_free(g);
    }
}

#[test]
fn parse_and_write_round_trip() {
    unsafe {
        let text = CString::new("# path\n3 2\n0 1\n1 2\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(trungcd_graph_from_edge_list(text.as_ptr(), &mut g), TrungcdStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(trungcd_graph_to_edge_list(g, &mut s), TrungcdStatus::Ok);
        assert_eq!(take_string(s), "3 2\n0 1\n1 2\n");
        assert_eq!(trungcd_graph_to_graph6(g, &mut s), TrungcdStatus::Ok);
        let g6 = take_string(s);
        trungcd_graph_free(g);

        let c = CString::new(g6).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(trungcd_graph_from_graph6(c.as_ptr(), &mut h), TrungcdStatus::Ok);
        assert_eq!(trungcd_graph_edge_count(h), 2);
        trungcd_graph_free(h);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("3 1\n0 3\n").unwrap();
        assert_eq!(
            trungcd_graph_from_edge_list(bad.as_ptr(), &mut g),
            TrungcdStatus::ParseError
        );
        assert!(g.is_null());
        assert!(last_error().contains("line 2"));

        let edges: [u32; 2] = [0, 7];
        assert_eq!(
            trungcd_graph_from_edges(3, edges.as_ptr(), 1, &mut g),
            TrungcdStatus::DomainError
        );
        assert_eq!(
            trungcd_graph_from_edges(65, ptr::null(), 0, &mut g),
            TrungcdStatus::ResourceError
        );
        assert_eq!(
            trungcd_graph_from_edge_list(ptr::null(), &mut g),
            TrungcdStatus::NullPointer
        );
        assert_eq!(
            trungcd_graph_from_edges(2, ptr::null(), 0, ptr::null_mut()),
            TrungcdStatus::NullPointer
        );

        let mut s = ptr::null_mut();
        assert_eq!(trungcd_ind_poly_json(ptr::null(), &mut s), TrungcdStatus::NullPointer);
        trungcd_graph_free(ptr::null_mut());
        trungcd_string_free(ptr::null_mut());
    }
}

#[test]
fn construction_labels() {
    unsafe {
        let edges: [u32; 2] = [0, 1];
        let mut k2 = ptr::null_mut();
        assert_eq!(
            trungcd_graph_from_edges(2, edges.as_ptr(), 1, &mut k2),
            TrungcdStatus::Ok
        );
        let mut tr = ptr::null_mut();
        let mut labels = TrungcdLabels::default();
        assert_eq!(trungcd_trung(k2, 0, &mut tr, &mut labels), TrungcdStatus::Ok);
        assert_eq!(labels, TrungcdLabels { a: 2, b: 3, c: 4, v: 0 });
        assert_eq!(trungcd_graph_vertex_count(tr), 5);
        assert_eq!(trungcd_graph_edge_count(tr), 5);
        trungcd_graph_free(tr);

        let mut out = ptr::null_mut();
        assert_eq!(
            trungcd_trung(k2, 9, &mut out, ptr::null_mut()),
            TrungcdStatus::DomainError
        );
        trungcd_graph_free(k2);

        let mut lone = ptr::null_mut();
        assert_eq!(
            trungcd_graph_from_edges(1, ptr::null(), 0, &mut lone),
            TrungcdStatus::Ok
        );
        assert_eq!(
            trungcd_trung(lone, 0, &mut out, ptr::null_mut()),
            TrungcdStatus::DomainError
        );
        assert!(last_error().contains("isolated"));
        trungcd_graph_free(lone);
    }
}

#[test]
fn family_members_and_checks() {
    unsafe {
        let mut fam = ptr::null_mut();
        assert_eq!(trungcd_family_generate(3, false, 0, &mut fam), TrungcdStatus::Ok);
        assert_eq!(trungcd_family_len(fam), 3);
        for i in 0..3 {
            let mut g = ptr::null_mut();
            let mut labels = TrungcdLabels::default();
            assert_eq!(trungcd_family_member(fam, i, &mut g, &mut labels), TrungcdStatus::Ok);
            let n = trungcd_graph_vertex_count(g);
            assert_eq!(n, 5 + 3 * (i + 1));
            assert_eq!((labels.a, labels.b, labels.c), (n - 3, n - 2, n - 1));

            let mut s = ptr::null_mut();
            assert_eq!(
                trungcd_check_json(g, TRUNGCD_CHECK_ALL, false, &mut s),
                TrungcdStatus::Ok
            );
            let report: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert_eq!(report["gorenstein"]["verdict"], "holds");
            assert_eq!(report["w2"]["verdict"], "holds");
            trungcd_graph_free(g);
        }
        let mut g = ptr::null_mut();
        assert_eq!(
            trungcd_family_member(fam, 3, &mut g, ptr::null_mut()),
            TrungcdStatus::DomainError
        );
        trungcd_family_free(fam);

        assert_eq!(
            trungcd_family_generate(0, false, 0, &mut fam),
            TrungcdStatus::DomainError
        );
        assert_eq!(
            trungcd_family_generate(20, false, 0, &mut fam),
            TrungcdStatus::ResourceError
        );
    }
}

#[test]
fn check_selection_flags() {
    unsafe {
        let g = c5();
        let mut s = ptr::null_mut();
        let flags = TRUNGCD_CHECK_WELL_COVERED | TRUNGCD_CHECK_CHARNEY_DAVIS;
        assert_eq!(trungcd_check_json(g, flags, false, &mut s), TrungcdStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert!(report.get("w2").is_none());
        assert_eq!(report["well_covered"]["verdict"], "holds");
        assert_eq!(report["charney_davis"]["status"], "holds_positive");
        assert_eq!(report["charney_davis"]["value"], "1/4");
        trungcd_graph_free(g);
    }
}

#[test]
fn w2_cap_reports_resource_error() {
    unsafe {
        let mut fam = ptr::null_mut();
        assert_eq!(trungcd_family_generate(4, false, 0, &mut fam), TrungcdStatus::Ok);
        let mut g = ptr::null_mut();
        assert_eq!(
            trungcd_family_member(fam, 3, &mut g, ptr::null_mut()),
            TrungcdStatus::Ok
        );
        assert_eq!(trungcd_graph_vertex_count(g), 17);
        let mut s = ptr::null_mut();
        assert_eq!(
            trungcd_check_json(g, TRUNGCD_CHECK_W2, false, &mut s),
            TrungcdStatus::ResourceError
        );
        assert_eq!(trungcd_check_json(g, TRUNGCD_CHECK_W2, true, &mut s), TrungcdStatus::Ok);
        trungcd_string_free(s);
        trungcd_graph_free(g);
        trungcd_family_free(fam);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/trungcd.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = std::env::temp_dir().join(format!("trungcd-hdr-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("probe.c");
    std::fs::write(
        &src,
        "#include \"trungcd.h\"\nint main(void) { return TRUNGCD_STATUS_OK; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args([
            "-fsyntax-only",
            "-Wall",
            "-Werror",
            "-I",
            concat!(env!("CARGO_MANIFEST_DIR"), "/include"),
        ])
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            std::process::Command::new(c)
                .arg("--version")
                .output()
                .is_ok_and(|o| o.status.success())
        })
        .ok_or(())
}
