# -*- coding: utf-8 -*-

"""Non-graphical part of the SDF Hyperideal step in a SEAMM flowchart
"""

import logging
from pathlib import Path
import textwrap

from tabulate import tabulate

import sdf_hyperideal_step
import seamm
from seamm_util import getParser
import seamm_util.printing as printing
from seamm_util.printing import FormattedText as __

from .corpus import generate_corpus, load_fixture
from .harness import (
    FAMILY_MAX,
    MATRIX_CAP,
    PRODUCT_CAP,
    HarnessContext,
    check_theorem,
    run_all,
)
from .ideals import ENUMERATION_CAP
from .ring_format import read_ring
from .sdf import classify

# In addition to the normal logger, two logger-like printing facilities are
# defined: "job" and "printer". "job" send output to the main job.out file for
# the job, and should be used very sparingly, typically to echo what this step
# will do in the initial summary of the job.
#
# "printer" sends output to the file "step.out" in this steps working
# directory, and is used for all normal output from this step.

logger = logging.getLogger(__name__)
job = printing.getPrinter()
printer = printing.getPrinter("SDF Hyperideal")


class SdfHyperideal(seamm.Node):
    """
    The non-graphical part of a SDF Hyperideal step in a flowchart.

    Attributes
    ----------
    parser : configargparse.ArgParser
        The parser object.

    options : tuple
        It contains a two item tuple containing the populated namespace and the
        list of remaining argument strings.

    parameters : SdfHyperidealParameters
        The control parameters for the step.

    See Also
    --------
    TkSdfHyperideal,
    SdfHyperideal, SdfHyperidealParameters
    """

    def __init__(
        self,
        flowchart=None,
        title="SDF Hyperideal",
        extension=None,
        logger=logger,
    ):
        """A step checking sdf-absorbing hyperideals in a SEAMM flowchart.

        Parameters
        ----------
        flowchart: seamm.Flowchart
            The non-graphical flowchart that contains this step.

        title: str
            The name displayed in the flowchart.
        extension: None
            Not yet implemented
        logger : Logger = logger
            The logger to use and pass to parent classes

        Returns
        -------
        None
        """
        logger.debug(f"Creating SDF Hyperideal {self}")

        super().__init__(
            flowchart=flowchart,
            title=title,
            extension=extension,
            module=__name__,
            logger=logger,
        )
        self.parameters = sdf_hyperideal_step.SdfHyperidealParameters()

        self._metadata = sdf_hyperideal_step.metadata

    @property
    def version(self):
        """The semantic version of this module."""
        return sdf_hyperideal_step.__version__

    def create_parser(self):
        """Setup the command-line / config file parser"""
        parser_name = self.step_type
        parser = getParser()

        # Remember if the parser exists ... this type of step may have been
        # found before
        parser_exists = parser.exists(parser_name)

        # Create the standard options, e.g. log-level
        result = super().create_parser(name=parser_name)

        if parser_exists:
            return result

        parser.add_argument(
            parser_name,
            "--enumeration-cap",
            type=int,
            default=ENUMERATION_CAP,
            help="largest ring order whose hyperideals are enumerated",
        )
        parser.add_argument(
            parser_name,
            "--product-cap",
            type=int,
            default=PRODUCT_CAP,
            help="largest product ring built for the product theorems",
        )
        parser.add_argument(
            parser_name,
            "--matrix-cap",
            type=int,
            default=MATRIX_CAP,
            help="largest hypermatrix ring scanned for the matrix theorem",
        )
        parser.add_argument(
            parser_name,
            "--family-max",
            type=int,
            default=FAMILY_MAX,
            help="largest family of hyperideals intersected",
        )

        return result

    def description_text(self, P=None):
        """Create the text description of what this step will do.
        The dictionary of control values is passed in as P so that
        the code can test values, etc.

        Parameters
        ----------
        P: dict
            An optional dictionary of the current values of the control
            parameters.
        Returns
        -------
        str
            A description of the current step.
        """
        if not P:
            P = self.parameters.values_to_dict()

        task = P["task"]
        if self.is_expr(task):
            text = f"The task will be determined at runtime by '{task}'."
        elif task == "classify a hyperideal":
            text = (
                f"Classify the hyperideal {{{P['ideal']}}} of the ring "
                f"'{P['ring']}': hyperideal, prime, weakly prime, maximal, C and "
                "strong C, and whether it is sdf-absorbing or weakly sdf-absorbing."
            )
        else:
            if task == "run all theorems":
                text = "Check every registered theorem"
            else:
                text = f"Check theorem {P['theorem']}"
            text += (
                f" over the corpus '{P['corpus']}', reporting counterexamples and "
                "how often each premise held."
            )

        return self.header + "\n" + __(text, indent=4 * " ").__str__()

    def run(self):
        """Run a SDF Hyperideal step.

        Parameters
        ----------
        None

        Returns
        -------
        seamm.Node
            The next node object in the flowchart.
        """
        next_node = super().run(printer)

        # Get the values of the parameters, dereferencing any variables
        P = self.parameters.current_values_to_dict(
            context=seamm.flowchart_variables._data
        )

        # Print what we are doing
        printer.important(__(self.description_text(P), indent=self.indent))

        if P["task"] == "classify a hyperideal":
            data = self.classify(P)
        else:
            data = self.check_theorems(P)

        self.analyze(data=data)

        return next_node

    def _settings(self):
        options = self.options
        return dict(
            cap=int(options["enumeration_cap"]),
            product_cap=int(options["product_cap"]),
            matrix_cap=int(options["matrix_cap"]),
            family_max=int(options["family_max"]),
        )

    def check_theorems(self, P):
        """Check one or all theorems over the corpus in the parameters."""
        settings = self._settings()
        corpus = generate_corpus(P["corpus"], enumeration_cap=settings["cap"])
        context = HarnessContext(corpus, **settings)
        if P["task"] == "run all theorems":
            verdicts = run_all(context)
        else:
            verdicts = [check_theorem(P["theorem"], context)]
        self._calculation = "theorems"
        return {
            "verdicts": verdicts,
            "theorems": len(verdicts),
            "instances": sum(v.instances_scanned for v in verdicts),
            "counterexamples": sum(len(v.counterexamples) for v in verdicts),
            "non_vacuous": sum(1 for v in verdicts if not v.vacuous),
        }

    def classify(self, P):
        """Classify the hyperideal given in the parameters."""
        name = P["ring"]
        if name in ("r1", "r2"):
            ring = load_fixture(name)
        else:
            ring = read_ring(Path(name).expanduser()).ring
        members = [int(x) for x in str(P["ideal"]).split(",") if x.strip()]
        report = classify(ring, ring.subset(members))
        self._calculation = "classify"
        return {
            "ring": ring.name,
            "report": report,
            "sdf": str(report.is_sdf).lower(),
            "weakly_sdf": str(report.is_weakly_sdf).lower(),
            "radical": str(report.radical),
        }

    def analyze(self, indent="", data={}, **kwargs):
        """Print the results of this step to the local step.out file using
        "printer", and store them as requested.

        Parameters
        ----------
        indent: str
            An extra indentation for the output
        data: dict
            The results of the task.
        """
        if "verdicts" in data:
            rows = [
                [
                    v.id,
                    v.instances_scanned,
                    v.premises_satisfied,
                    v.conclusions_held,
                    v.inapplicable,
                    len(v.counterexamples),
                ]
                for v in data["verdicts"]
            ]
            headers = [
                "Theorem",
                "Scanned",
                "Premises",
                "Held",
                "Inapplicable",
                "Counterexamples",
            ]
            title = "Theorem Verdicts"
            if data["counterexamples"] > 0:
                text = (
                    f"There were {data['counterexamples']} counterexamples! Each is "
                    "written to the log with the instance it fails on."
                )
                for v in data["verdicts"]:
                    for c in v.counterexamples:
                        logger.warning(
                            f"{c['theorem']} {c['clause']}: {c['instance']}"
                        )
            else:
                text = (
                    f"No counterexamples to the {data['theorems']} theorems; "
                    f"{data['non_vacuous']} had instances satisfying the premises."
                )
        else:
            report = data["report"]
            rows = [[name, value] for name, value in report.flags().items()]
            rows.append(["radical", str(report.radical)])
            headers = ["Property", "Value"]
            title = f"Hyperideal in {data['ring']}"
            text = (
                f"The hyperideal is {'' if report.is_sdf else 'not '}sdf-absorbing "
                f"and {'' if report.is_weakly_sdf else 'not '}weakly sdf-absorbing."
            )

        printer.normal(
            __(text, indent=self.indent + 4 * " ", wrap=True, dedent=False)
        )

        tmp = tabulate(rows, headers, tablefmt="psql", disable_numparse=True)
        length = len(tmp.splitlines()[0])
        text_lines = [title.center(length), tmp]
        printer.normal(
            "\n" + textwrap.indent("\n".join(text_lines), self.indent + 7 * " ")
        )
        printer.normal("")

        # Put any requested results into variables or tables
        self.store_results(configuration=None, data=data)
