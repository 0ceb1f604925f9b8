let speed;
robot.setRobotId(0);
robot.moveByX(speed);
