from typing import Optional

import typer

from wager import output, validators
from wager.callback import DefaultSeedCallback
from wager.constants import C_DEFAULT_ALPHA, C_NOT_ENOUGH_TRIALS
from wager.engine import GameResult, new_game_config, run_game
from wager.errors import BadParameterError, ConfigError
from wager.harness import resolve_m
from wager.helper import format_trials, load_trials, write_text
from wager.models import AGENT_ORDER, Action, AppContext, OutputMode
from wager.seeding import run_generator, run_seed, stream_key

DEFAULT_TRIALS = 20
DEFAULT_M_FRACTION = 0.5

########################################
# Rendering
########################################


def _entry_text(action: Action, payoff: float, penalty: float):
    if action == Action.hold:
        return f"Hold -{penalty:.4f}" if penalty else "Hold"
    return f"{action.value} {payoff:+.4f}"


def ledger_rows(result: GameResult):

    rows = []
    for i, trial in enumerate(result.trials):
        row = {
            "trial": trial.index,
            "price": trial.price,
            "outcome": trial.outcome.value,
        }
        for kind in AGENT_ORDER:
            entry = result.agent(kind).ledger[i]
            row[kind.value] = _entry_text(entry.action, entry.payoff, entry.penalty)
        rows.append(row)

    return rows


def metric_rows(result: GameResult):

    rows = []
    for kind in AGENT_ORDER:
        agent = result.agent(kind)
        rows.append(
            {
                "agent": kind.value,
                "total_profit": agent.total_profit,
                "bets_placed": agent.bets_placed,
                "profit_per_allowed_bet": agent.profit_per_allowed_bet,
                "profit_per_actual_bet": agent.profit_per_actual_bet,
                "penalized_holds": agent.penalized_holds,
            }
        )

    return rows


def result_dict(result: GameResult, seed: Optional[int]):

    agents = {}
    for kind, row in zip(AGENT_ORDER, metric_rows(result)):
        del row["agent"]
        ledger = result.agent(kind).ledger
        row["ledger"] = [
            {
                "trial": e.index,
                "action": e.action.value,
                "payoff": e.payoff,
                "penalty": e.penalty,
            }
            for e in ledger
        ]
        agents[kind.value] = row

    return {
        "config": result.config.dict(),
        "seed": seed,
        "trials": [
            {"trial": t.index, "price": t.price, "outcome": t.outcome.value}
            for t in result.trials
        ],
        "agents": agents,
    }


########################################
# Run game
########################################


def run_game_cmd(
    ctx: typer.Context,
    p: float = typer.Option(
        0.5,
        "--p",
        callback=validators.open_probability,
        help="True chance of heads",
    ),
    n: Optional[int] = typer.Option(
        None,
        "--n",
        callback=validators.positive_int,
        help=f"Number of trials. Default: {DEFAULT_TRIALS} or the trial file length",
    ),
    m: Optional[int] = typer.Option(
        None,
        "--m",
        help="Token budget, 1 ≤ m ≤ n. Default: half of n, rounded half up",
    ),
    alpha: float = typer.Option(
        C_DEFAULT_ALPHA,
        "--alpha",
        callback=validators.open_probability,
        help="Conf plays at confidence level 1 - alpha",
    ),
    prior: str = typer.Option(
        "1,1",
        "--prior",
        callback=validators.prior_pair,
        help="Bayes prior beta(a,b) given as 'a,b'",
    ),
    penalty: float = typer.Option(
        0.0,
        "--penalty",
        callback=validators.nonnegative_float,
        help="Charge Conf this much for every hold while tokens remain",
    ),
    seed: int = typer.Option(
        None,
        "--seed",
        callback=DefaultSeedCallback(),
        help="Master seed. The game replays run 0 of its sweep cell",
    ),
    trials_path: Optional[str] = typer.Option(
        None,
        "--trials",
        callback=validators.file_read_required,
        help="File of 'price,outcome' lines to play instead of random trials",
    ),
    save_trials: Optional[str] = typer.Option(
        None,
        "--save-trials",
        help="Write the played trials to a file that --trials can replay",
    ),
    ledger: bool = typer.Option(
        True,
        help="Show the per-trial ledger",
    ),
):
    app_ctx: AppContext = ctx.obj
    output_mode = app_ctx.output_mode

    trials = None
    if trials_path:
        trials = load_trials(trials_path)
        if not trials:
            raise ConfigError(C_NOT_ENOUGH_TRIALS)

        if n is None:
            n = len(trials)
        elif n != len(trials):
            msg = f"n is {n}, but the trial file has {len(trials)} trials"
            raise BadParameterError(ctx, msg, "n", "trials_path")

    n = n or DEFAULT_TRIALS
    if m is None:
        m = resolve_m(DEFAULT_M_FRACTION, n)

    prior_a, prior_b = prior
    config = new_game_config(
        p=p,
        n=n,
        m=m,
        alpha=alpha,
        prior_a=prior_a,
        prior_b=prior_b,
        abstain_penalty=penalty,
    )

    if trials is None:
        rng = run_generator(run_seed(seed, stream_key(config.p, config.n), 0))
        result = run_game(config, rng)
    else:
        seed = None
        result = run_game(config, trials=trials)

    if save_trials:
        write_text(save_trials, format_trials(result.trials))
        output.success(f"Trials written to '{save_trials}'")

    if output_mode == OutputMode.json:
        output.result_json(result_dict(result, seed))
        return

    output.message(f"Game <{config.describe()}, seed={seed}>", output_mode)

    if ledger:
        columns = [
            ("trial", "Trial"),
            ("price", "Price"),
            ("outcome", "Outcome"),
            *[(kind.value, kind.value) for kind in AGENT_ORDER],
        ]
        output.list_data(ledger_rows(result), columns, output_mode)

    columns = [
        ("agent", "Agent"),
        ("total_profit", "Total profit"),
        ("bets_placed", "Bets placed"),
        ("profit_per_allowed_bet", "Per allowed bet"),
        ("profit_per_actual_bet", "Per actual bet"),
        ("penalized_holds", "Penalized holds"),
    ]
    output.list_data(metric_rows(result), columns, output_mode)
