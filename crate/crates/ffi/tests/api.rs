use std::ffi::{CStr, CString};
use std::ptr;

use openpack_ffi::*;

fn graph(text: &str) -> *mut OpGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { op_graph_parse(c.as_ptr(), OpFormat::EdgeList, &mut g) }, OpStatus::Ok);
    g
}

fn last_error() -> Option<String> {
    let p = op_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn build_and_query() {
    let edges = [0usize, 1, 1, 2, 2, 0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(op_graph_new(3, edges.as_ptr(), 3, &mut g), OpStatus::Ok);
        assert_eq!((op_graph_order(g), op_graph_size(g)), (3, 3));
        let mut girth = 0;
        assert_eq!(op_graph_girth(g, &mut girth), OpStatus::Ok);
        assert_eq!(girth, 3);
        op_graph_free(g);
    }
}

#[test]
fn forests_report_infinite_girth() {
    let g = graph("3 2\n0 1\n1 2\n");
    let mut girth = 99;
    unsafe {
        assert_eq!(op_graph_girth(g, &mut girth), OpStatus::Ok);
        op_graph_free(g);
    }
    assert_eq!(girth, OP_GIRTH_INFINITE);
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("2 1\n0 2\n").unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { op_graph_parse(bad.as_ptr(), OpFormat::EdgeList, &mut g) };
    assert_eq!(status, OpStatus::Range);
    assert!(g.is_null());
    assert!(last_error().unwrap().contains("line 2"));

    let edges = [1usize, 1];
    assert_eq!(unsafe { op_graph_new(2, edges.as_ptr(), 1, &mut g) }, OpStatus::Loop);
    assert_eq!(unsafe { op_gen_cycle(2, &mut g) }, OpStatus::InvalidArgument);
    assert_eq!(unsafe { op_graph_new(2, ptr::null(), 1, &mut g) }, OpStatus::NullPointer);
    assert_eq!(unsafe { op_graph_girth(ptr::null(), &mut 0) }, OpStatus::NullPointer);

    // success clears the message
    assert_eq!(unsafe { op_gen_path(3, &mut g) }, OpStatus::Ok);
    assert!(last_error().is_none());
    unsafe { op_graph_free(g) };
}

#[test]
fn packing_report_of_t3() {
    let mut g = ptr::null_mut();
    let mut r = OpPackingReport::default();
    unsafe {
        assert_eq!(op_gen_t(3, &mut g), OpStatus::Ok);
        assert_eq!(op_packing_report(g, OP_DEFAULT_CAP, &mut r), OpStatus::Ok);
        assert_eq!(op_packing_report(g, 10, &mut r), OpStatus::CapExceeded);
        op_graph_free(g);
    }
    assert_eq!((r.rho_open_lower, r.rho_open, r.uniform), (2, 8, false));
}

#[test]
fn decisions_and_recognition() {
    let mut g = ptr::null_mut();
    let mut verdict = OpVerdict::Undecided;
    unsafe {
        assert_eq!(op_gen_gk(2, &mut g), OpStatus::Ok);
        assert_eq!(op_decide(g, OpMode::Brute, OP_DEFAULT_CAP, &mut verdict), OpStatus::Ok);
        assert_eq!(verdict, OpVerdict::InU);
        op_graph_free(g);

        g = graph("5 4\n0 1\n1 2\n2 3\n3 4\n");
        assert_eq!(op_decide(g, OpMode::Structural, OP_DEFAULT_CAP, &mut verdict), OpStatus::Ok);
        assert_eq!(verdict, OpVerdict::NotInU);
        let (mut accepted, mut predicted, mut condition) = (true, 0, 9);
        assert_eq!(op_recognize(g, &mut accepted, &mut predicted, &mut condition), OpStatus::Ok);
        assert!(!accepted);
        assert!(condition <= 5);
        op_graph_free(g);

        g = graph("4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(op_recognize(g, &mut accepted, &mut predicted, ptr::null_mut()), OpStatus::Ok);
        assert!(accepted);
        assert_eq!(predicted, 2);
        op_graph_free(g);
    }
}

#[test]
fn json_report_and_serialization() {
    let g = graph("4 3\n0 1\n1 2\n2 3\n");
    let (mut json, mut g6) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(op_report_json(g, OpMode::Auto, OP_DEFAULT_CAP, &mut json), OpStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap();
        assert!(text.contains("\"schema\": 1") && text.contains("\"IN_U\""), "{text}");
        op_string_free(json);

        assert_eq!(op_graph_write(g, OpFormat::Graph6, &mut g6), OpStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(op_graph_parse(g6, OpFormat::Graph6, &mut back), OpStatus::Ok);
        assert_eq!(op_graph_size(back), 3);
        op_string_free(g6);
        op_graph_free(back);
        op_graph_free(g);
    }
}

#[test]
fn generators() {
    let mut g = ptr::null_mut();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(op_gen_random_tree(12, 7, &mut g), OpStatus::Ok);
        assert_eq!((op_graph_order(g), op_graph_size(g)), (12, 11));
        op_graph_free(g);

        assert_eq!(op_gen_cycle(5, &mut h), OpStatus::Ok);
        assert_eq!(op_embed_in_u(h, &mut g), OpStatus::Ok);
        assert_eq!(op_graph_order(g), 20);
        let mut r = OpPackingReport::default();
        assert_eq!(op_packing_report(g, OP_DEFAULT_CAP, &mut r), OpStatus::Ok);
        assert!(r.uniform && r.rho_open == 10);
        op_graph_free(g);
        op_graph_free(h);

        assert_eq!(op_gen_f_tree(4, 1, &mut g), OpStatus::Ok);
        let mut accepted = false;
        assert_eq!(op_recognize(g, &mut accepted, ptr::null_mut(), ptr::null_mut()), OpStatus::Ok);
        assert!(accepted);
        op_graph_free(g);
        assert_eq!(op_gen_f_tree(1, 1, &mut g), OpStatus::InvalidArgument);
    }
    assert!(!op_version().is_null());
}
