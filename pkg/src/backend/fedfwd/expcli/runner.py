"""
单次实验的执行与输出: 指标 CSV、最终模型检查点、JSON 摘要
"""

from src.backend.fedfwd.conf import ExperimentConfig
from src.backend.fedfwd.federation import ExperimentData, RoundState, run_federation
from src.backend.fedfwd.storage import model_digest, save_checkpoint
from .metrics import write_metrics, write_report


def build_summary(config: ExperimentConfig, state: RoundState) -> dict:
    summary = state.log.summary()
    summary.update({
        "run_name": config.run_name(),
        "config": config.model_dump(mode="json"),
        "num_parameters": state.global_model.num_parameters,
        "model_sha256": model_digest(state.global_model),
    })
    return summary


def execute_run(config: ExperimentConfig, data: ExperimentData = None) -> RoundState:
    """
    执行实验并按配置写出结果文件

    Args:
        config: 实验配置；output_csv / checkpoint_path / summary_json 为空时不写对应文件
        data: 预先准备好的数据，为空时按配置加载

    Returns:
        RoundState: 实验结束时的服务器状态
    """
    state = run_federation(config, data)
    if config.output_csv is not None:
        write_metrics(state.log, config.output_csv)
    if config.checkpoint_path is not None:
        save_checkpoint(state.global_model, config.checkpoint_path)
    if config.summary_json is not None:
        write_report(build_summary(config, state), config.summary_json)
    return state
