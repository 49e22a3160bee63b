import os

# default cache
default_home = os.path.join(os.path.expanduser("~"), ".cache")
WELDKB_HOME = os.path.expanduser(
    os.getenv(
        "WELDKB_HOME",
        os.path.join(os.getenv("XDG_CACHE_HOME", default_home), "weldkb"),
    )
)

# run results are saved in WELDKB_HOME/rules/<presentation name>
default_rules_path = os.path.join(WELDKB_HOME, "rules")

WELDKB_RULES_CACHE = os.getenv("WELDKB_RULES_CACHE", default_rules_path)

RULES_NAME = "rules.fsa"
HISTORY_NAME = "passes.csv"
SUMMARY_NAME = "summary.json"

# text tokens shared by the word, presentation and automaton formats
PAD_TOKEN = "-"
EMPTY_WORD_TOKEN = "e"
