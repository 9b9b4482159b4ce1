"""命令行模块"""

from partmod.cli.app import main

__all__ = ['main']
