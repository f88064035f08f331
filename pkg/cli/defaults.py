from colorama import Fore

from sep_core.gptops import GptOpSet


class Defaults:
    # Exit codes, stable and documented in the help text
    EXIT_CLEAN = 0
    EXIT_ENTANGLED = 1
    EXIT_USAGE = 2

    FLOAT_FORMAT = '.17g'
    VERDICT_COLUMNS = ('criterion', 'yset', 'statistic', 'bound', 'N', 'entangled')

    WERNER_AXIS = (-1.0, 1.0)
    HORODECKI_AXIS = (0.05, 0.95)
    B_AXIS = (-1.0, 1.0)

    # (a, b) grid used by compare when the config does not override it
    COMPARE_GRID = (-1.0, -1 / 3, 0.0, 0.5, 2 / 3, 1.0)
    COMPARE_WERNER_F = tuple(round(-1 + 0.1 * k, 12) for k in range(21))
    COMPARE_HORODECKI_C = tuple(round(0.05 * k, 12) for k in range(1, 20))

    ALL_YSETS = GptOpSet.all()

    WARNING_COLOR = Fore.YELLOW
    ERROR_COLOR = Fore.RED
    DETECTED_COLOR = Fore.LIGHTRED_EX
    SUMMARY_COLOR = Fore.CYAN

    NOT_DETECTED_WORDING = (
        "'not entangled' means not detected by these necessary criteria, never proven separable")
