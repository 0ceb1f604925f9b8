let target;
target = 0.5;
robot.setRobotId(0);
robot.moveToX(target);
