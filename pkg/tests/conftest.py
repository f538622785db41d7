def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        res = RESULTS[number]
        terminalreporter.write_line(res.line())
        for note in res.notes:
            terminalreporter.write_line("    " + note)
