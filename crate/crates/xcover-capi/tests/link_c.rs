//! Compiles and runs a small C program against the generated header and
//! the static library, proving the ABI end to end.

use std::env;
use std::fs;
use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "xcover.h"

static void on_solution(const uint32_t *rows, size_t len, void *user) {
    (void)rows;
    (void)len;
    ++*(int *)user;
}

int main(void) {
    const char *text = "%secondary s\na s\nb\na b\n";
    XcInstance *inst = NULL;
    if (xc_instance_parse(text, strlen(text), &inst) != XC_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", xc_last_error());
        return 1;
    }
    assert(xc_instance_row_count(inst) == 3);

    int seen = 0;
    XcStats stats;
    if (xc_solve(inst, XC_ENGINE_DLX, NULL, on_solution, &seen, &stats) != XC_STATUS_OK) {
        fprintf(stderr, "solve: %s\n", xc_last_error());
        return 1;
    }
    assert(seen == 2);
    assert(stats.solutions == 2);
    assert(stats.halted_by == XC_HALT_EXHAUSTED);

    uint64_t count = 0;
    assert(xc_count(inst, XC_ENGINE_NAIVE, &count) == XC_STATUS_OK);
    assert(count == 2);

    char *round = xc_instance_to_text(inst);
    assert(strcmp(round, text) == 0);
    xc_string_free(round);
    xc_instance_free(inst);
    puts("ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    // target/debug holds the staticlib next to this test's deps directory
    let target_dir = env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let staticlib = target_dir.join("libxcover_capi.a");
    assert!(
        staticlib.exists(),
        "staticlib not found at {}",
        staticlib.display()
    );

    let work = target_dir.join("capi-link-test");
    fs::create_dir_all(&work).unwrap();
    let source = work.join("smoke.c");
    let binary = work.join("smoke");
    fs::write(&source, C_PROGRAM).unwrap();

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include)
        .arg(&staticlib)
        .arg("-lpthread")
        .arg("-ldl")
        .arg("-lm")
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc not available");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().unwrap();
    assert!(run.status.success(), "run failed: {run:?}");
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
