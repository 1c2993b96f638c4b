import logging
import os
from pathlib import Path

import dotenv

# 加载仓库根目录下的 .env 文件
PROJECT_ROOT = Path(__file__).resolve().parents[4]
dotenv.load_dotenv(PROJECT_ROOT / '.env')

# 数据目录，需手动放入 MNIST / CIFAR-10 原始文件
DATA_DIR = Path(os.getenv('FEDFWD_DATA_DIR', str(PROJECT_ROOT / 'data')))
# 一轮之内并行训练客户端的线程数
WORKERS = int(os.getenv('FEDFWD_WORKERS', '1'))
LOG_LEVEL = os.getenv('FEDFWD_LOG_LEVEL', 'INFO')

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: str = None) -> None:
    """CLI 入口调用一次，配置根日志"""
    logging.basicConfig(level=(level or LOG_LEVEL).upper(), format=LOG_FORMAT)
