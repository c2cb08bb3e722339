def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL",
                              props["title"], props.get("seconds")))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, title, seconds in sorted(lines):
        timing = f" ({seconds:.2f} s)" if seconds is not None else ""
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}{timing}")
