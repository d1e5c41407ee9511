from typing import Any, Dict, List, Sequence, Tuple

from . import _msgs as msgs
from ._commands import Float, Int
from ._helpers import CliError


def _count_params(s: str) -> int:
    res = 0
    while res < len(s) and s[res] in ".+*":
        res += 1
    return res


def _flag_name(s: str) -> str:
    return "--" + s[_count_params(s) :]


def _default_value(s: str) -> Any:
    return False if _count_params(s) == 0 else None


def extract_args(
    actual_args: Sequence[str],
    expected: Tuple[str, ...],
    error_on_unexpected: bool = True,
) -> Tuple[List[Any], List[str]]:
    """Parse `--flag value` arguments.

    :param actual_args: The actual arguments to parse
    :param expected: Flags to look for, without the leading `--`, see below.
    :param error_on_unexpected: Should an error be raised when actual_args contain an unexpected argument?
    :returns:
        - List of values for expected flags, in the order of `expected`.
        - List of remaining args.

    A flag takes a value when its name is prefixed:
    - An integer (Int) value is identified with '+'
    - A float (Float) value is identified with '.'
    - A string value is identified with '*'
    A flag without prefix is boolean. Absent flags default to None (False for booleans); a repeated flag keeps its
    last value.

    >>> extract_args(['--spec', 'bm.json', '--seed', '7', '--verbose'], ('*spec', '+seed', '.rtol', 'verbose'))
    (['bm.json', 7, None, True], [])
    """
    flags: Dict[str, int] = {_flag_name(k): i for (i, k) in enumerate(expected)}
    results: List[Any] = [_default_value(key) for key in expected]
    left_args: List[str] = []
    i = 0
    while i < len(actual_args):
        arg = actual_args[i]
        if arg not in flags:
            if error_on_unexpected:
                raise CliError(msgs.SYNTAX_ERROR_MSG.format(arg))
            left_args.append(arg)
            i += 1
            continue
        pos = flags[arg]
        kind = expected[pos][:1]
        if _count_params(expected[pos]) == 0:
            results[pos] = True
            i += 1
            continue
        if i + 1 >= len(actual_args):
            raise CliError(msgs.SYNTAX_ERROR_MSG.format(arg))
        value: Any = actual_args[i + 1]
        if kind == "+":
            value = Int.decode(value)
        elif kind == ".":
            value = Float.decode(value)
        results[pos] = value
        i += 2
    return results, left_args
