//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "openpack.h"

int main(void) {
    OpGraph *g = NULL;
    if (op_gen_t(3, &g) != OP_STATUS_OK) return 10;
    OpPackingReport r;
    if (op_packing_report(g, OP_DEFAULT_CAP, &r) != OP_STATUS_OK) return 11;
    if (r.rho_open_lower != 2 || r.rho_open != 8 || r.uniform) return 12;
    OpVerdict v;
    if (op_decide(g, OP_MODE_AUTO, OP_DEFAULT_CAP, &v) != OP_STATUS_OK || v != OP_VERDICT_NOT_IN_U) return 13;
    op_graph_free(g);

    OpGraph *bad = NULL;
    if (op_graph_parse("2 1\n0 2\n", OP_FORMAT_EDGE_LIST, &bad) != OP_STATUS_RANGE) return 14;
    if (op_last_error_message() == NULL || strstr(op_last_error_message(), "line 2") == NULL) return 15;

    char *json = NULL;
    if (op_graph_parse("4 3\n0 1\n1 2\n2 3\n", OP_FORMAT_EDGE_LIST, &g) != OP_STATUS_OK) return 16;
    if (op_report_json(g, OP_MODE_STRUCTURAL, OP_DEFAULT_CAP, &json) != OP_STATUS_OK) return 17;
    if (strstr(json, "\"IN_U\"") == NULL) return 18;
    op_string_free(json);
    op_graph_free(g);
    printf("ok %s\n", op_version());
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libopenpack_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c_program");
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("main.c");
    let binary = work.join("main");
    std::fs::write(&source, PROGRAM).unwrap();

    let compiler = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&compiler)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&source)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .status()
        .unwrap_or_else(|e| panic!("could not run C compiler {compiler:?}: {e}"));
    assert!(status.success(), "C compilation failed");

    let output = Command::new(&binary).output().unwrap();
    assert!(output.status.success(), "C program exited with {:?}", output.status.code());
    assert!(String::from_utf8_lossy(&output.stdout).starts_with("ok "));
}
