"""
partmod - 对称群与交错群模表示的分拆组合

分拆与 Young 图运算、晶体算子与分支规则、Mullineux 映射、
交错群标签、特征 2 和 3 下张量积不可约性的分类，以及基于
Specht 模 Gram 秩的独立验证。
"""

__version__ = "1.0.0"
