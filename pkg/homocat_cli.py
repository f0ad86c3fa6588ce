import sys
import homocat
from homocat import cli

__version__ = homocat.__version__
__date__ = homocat.__date__
__maintainer__ = 'homocat maintainers'

""" homocat_cli.py
    Command line entry point for homocat.

    Every subcommand prints one report (json by default, --format tsv or text)
    and exits 0 on success, 1 when the requested check fails and 2 on a usage
    error. `homocat_cli.py <subcommand> --help` lists the options.

    e.g.
      homocat_cli.py ext --geometry igrass-c --k 3 --n 3 --a 2,1,0 --b 2,1,0
      homocat_cli.py schubert-count --family B --rank 3 --parabolic 3
      homocat_cli.py verify --geometry grass-a --k 2 --n 4 --collection kapranov --mode strong
"""


def main():
    sys.exit(cli.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
