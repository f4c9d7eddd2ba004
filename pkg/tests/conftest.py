from fractions import Fraction

from hypothesis import strategies as st

from kneadprime.symbolic import SymbolicWord

RL = st.sampled_from("RL")


def rl_strings(min_size=0, max_size=8):
    return st.text(alphabet="RL", min_size=min_size, max_size=max_size)


@st.composite
def infinite_words(draw, max_pre=6, max_per=6):
    return SymbolicWord(draw(rl_strings(0, max_pre)), draw(rl_strings(1, max_per)))


@st.composite
def periodic_words(draw, max_per=8):
    return SymbolicWord.periodic(draw(rl_strings(1, max_per)))


def itinerary_value(word: SymbolicWord) -> Fraction:
    """Exact real value of the alternating-binary coding of a C-free word.

    Digit k is the parity of the number of R among symbols 0..k; the value is
    sum(digit_k / 2**(k+1)).  This map is increasing in the kneading order.
    """
    pre, per = word.preperiod, word.period

    def digits(s, parity):
        out = []
        for c in s:
            parity ^= c == "R"
            out.append(parity)
        return out, parity

    head, parity = digits(pre, 0)
    cycle, end = digits(per, parity)
    if end != parity:
        more, _ = digits(per, end)
        cycle += more
    value = sum(Fraction(d, 2 ** (k + 1)) for k, d in enumerate(head))
    p = len(cycle)
    block = sum(Fraction(d, 2 ** (k + 1)) for k, d in enumerate(cycle))
    return value + block / 2 ** len(head) / (1 - Fraction(1, 2 ** p))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
