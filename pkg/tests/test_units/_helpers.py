"""Cross-folder helpers shared by the per-subpackage test suites.

Type-agnostic only: builders that reference concrete stages or plans belong in
the per-folder ``_helpers.py``.
"""

__docformat__ = "restructuredtext"

import re

LOG_LINE = re.compile(r"^\[([A-Z]+)\] ([\w.-]+)\.([\w_]+)\(\) \| ([\w_ ]+) -> (\S+)(?: \[(.+)\])?$")
"""``[PREFIX] owner.method() | action -> target [context]``."""


def verify_topological_order(sorted_stages: list) -> None:
    """Assert every stage appears after all of its predecessors in ``sorted_stages``.

    :param sorted_stages: Stages in execution order.
    :raises AssertionError: If any predecessor appears after its successor.
    """
    position = {stage.name: i for i, stage in enumerate(sorted_stages)}
    for stage in sorted_stages:
        for pre in stage.pre_stages:
            assert position[pre.name] < position[stage.name], (
                f"{pre.name} should appear before {stage.name}"
            )


def log_lines(captured: str) -> list[str]:
    """Keep the prefixed progress lines of captured stdout.

    :param captured: Captured stdout.

    :return: Stripped lines starting with ``[``.
    """
    return [line.strip() for line in captured.splitlines() if line.strip().startswith("[")]


def parse_log_line(line: str) -> dict[str, str | None]:
    """Split a progress line into its fields.

    :param line: One progress line.

    :return: Mapping with ``prefix``, ``owner``, ``method``, ``action``, ``target``, ``context``.
    :raises AssertionError: If the line does not follow the progress format.
    """
    match = LOG_LINE.match(line)
    assert match is not None, f"Line does not follow the progress format: {line}"
    prefix, owner, method, action, target, context = match.groups()
    return {
        "prefix": prefix,
        "owner": owner,
        "method": method,
        "action": action,
        "target": target,
        "context": context,
    }
